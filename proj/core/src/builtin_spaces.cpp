#include "jscfp/builtin_spaces.hpp"

#include <cmath>
#include <string>

namespace jscfp {

double sample_finite_real(Rng& rng, double scale) {
    std::student_t_distribution<double> t(3.0);
    return scale * t(rng);
}

ExtReal sample_extended_real(Rng& rng, double scale) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double pick = u(rng);
    if (pick < 0.05) return ExtReal::pos_inf();
    if (pick < 0.10) return ExtReal::neg_inf();
    return sample_finite_real(rng, scale);
}

namespace {

bool is_finite_real(const Point& p) {
    const auto* r = std::get_if<ExtReal>(&p);
    return r != nullptr && r->is_finite();
}

bool same_point(const Point& a, const Point& b) { return a == b; }

std::string render_point(const Point& p) { return to_string(p); }

// x_n = limit + s * r^(n+1) with |s| in [0.5, 5] and |r| in [0.1, 0.45].
ConvergentSequence<Point> geometric_sequence(Rng& rng, std::size_t length, double limit) {
    std::uniform_real_distribution<double> mag(0.5, 5.0);
    std::uniform_real_distribution<double> rate(0.1, 0.45);
    std::bernoulli_distribution flip(0.5);
    const double s = flip(rng) ? mag(rng) : -mag(rng);
    const double r = flip(rng) ? rate(rng) : -rate(rng);
    ConvergentSequence<Point> seq{{}, Point{ExtReal(limit)}};
    seq.prefix.reserve(length);
    double term = s * r;
    for (std::size_t n = 0; n < length; ++n, term *= r) seq.prefix.emplace_back(ExtReal(limit + term));
    return seq;
}

Space standard_real(const SpaceParams& params) {
    const double scale = params.sample_scale;
    Space s;
    s.name = "standard_real";
    s.contains = is_finite_real;
    s.metric = [](const Point& x, const Point& y) { return ext_abs(ext_sub(real_of(x), real_of(y))); };
    s.d3_constant = 1.0;
    s.equals = same_point;
    s.sample = [scale](Rng& rng) { return Point{ExtReal(sample_finite_real(rng, scale))}; };
    s.render = render_point;
    s.sample_convergent = [scale](Rng& rng, std::size_t len) {
        return geometric_sequence(rng, len, sample_finite_real(rng, scale));
    };
    return s;
}

Space dislocated_abs(const SpaceParams& params) {
    const double scale = params.sample_scale;
    Space s;
    s.name = "dislocated_abs";
    s.contains = [](const Point& p) { return is_real(p); };
    s.metric = [](const Point& x, const Point& y) { return ext_add(ext_abs(real_of(x)), ext_abs(real_of(y))); };
    s.d3_constant = 1.0;
    s.equals = same_point;
    s.sample = [scale](Rng& rng) { return Point{sample_extended_real(rng, scale)}; };
    s.render = render_point;
    // D(x_n, x) -> 0 forces |x| = 0, so every convergent sequence here has limit 0.
    s.sample_convergent = [](Rng& rng, std::size_t len) { return geometric_sequence(rng, len, 0.0); };
    return s;
}

Space b_metric_squared(const SpaceParams& params) {
    const double scale = params.sample_scale;
    Space s;
    s.name = "b_metric_squared";
    s.contains = is_finite_real;
    s.metric = [](const Point& x, const Point& y) {
        const double d = real_of(x).value() - real_of(y).value();
        return ExtReal(d * d);
    };
    s.d3_constant = 2.0;
    s.equals = same_point;
    s.sample = [scale](Rng& rng) { return Point{ExtReal(sample_finite_real(rng, scale))}; };
    s.render = render_point;
    s.sample_convergent = [scale](Rng& rng, std::size_t len) {
        return geometric_sequence(rng, len, sample_finite_real(rng, scale));
    };
    return s;
}

Space finite_discrete(const SpaceParams& params) {
    const std::size_t n = params.labels;
    if (n == 0) throw BadParams("finite_discrete needs labels >= 1");
    Space s;
    s.name = "finite_discrete";
    s.contains = [n](const Point& p) {
        const auto* l = std::get_if<Label>(&p);
        return l != nullptr && l->index < n;
    };
    s.metric = [](const Point& x, const Point& y) { return ExtReal(label_of(x) == label_of(y) ? 0.0 : 1.0); };
    s.d3_constant = 1.0;
    s.equals = same_point;
    s.sample = [n](Rng& rng) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        return Point{Label{pick(rng)}};
    };
    s.render = render_point;
    s.sample_convergent = [n](Rng& rng, std::size_t len) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::uniform_int_distribution<std::size_t> wander(0, len / 4);
        ConvergentSequence<Point> seq{{}, Point{Label{pick(rng)}}};
        const std::size_t lead = wander(rng);
        for (std::size_t i = 0; i < len; ++i) seq.prefix.push_back(i < lead ? Point{Label{pick(rng)}} : seq.limit);
        return seq;
    };
    return s;
}

} // namespace

Space builtin_space(SpaceKind kind, const SpaceParams& params) {
    if (!(params.sample_scale > 0.0) || !std::isfinite(params.sample_scale))
        throw BadParams("sample_scale must be positive and finite");
    switch (kind) {
    case SpaceKind::standard_real: return standard_real(params);
    case SpaceKind::dislocated_abs: return dislocated_abs(params);
    case SpaceKind::b_metric_squared: return b_metric_squared(params);
    case SpaceKind::finite_discrete: return finite_discrete(params);
    }
    throw BadParams("unknown space kind");
}

SpaceKind parse_space_kind(std::string_view name) {
    if (name == "standard_real") return SpaceKind::standard_real;
    if (name == "dislocated_abs") return SpaceKind::dislocated_abs;
    if (name == "b_metric_squared") return SpaceKind::b_metric_squared;
    if (name == "finite_discrete") return SpaceKind::finite_discrete;
    throw BadParams("unknown space kind '" + std::string(name) + "'");
}

std::string_view to_string(SpaceKind kind) noexcept {
    switch (kind) {
    case SpaceKind::standard_real: return "standard_real";
    case SpaceKind::dislocated_abs: return "dislocated_abs";
    case SpaceKind::b_metric_squared: return "b_metric_squared";
    case SpaceKind::finite_discrete: return "finite_discrete";
    }
    return "unknown";
}

} // namespace jscfp
