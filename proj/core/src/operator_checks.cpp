#include "jscfp/operator_checks.hpp"

#include <string>

namespace jscfp {

namespace {

// Running maximum of dist over all index pairs of pts, plus the growth flag.
template <class P, class Dist>
DeltaEstimate running_sup(const std::vector<P>& pts, Dist dist, double plateau_rtol) {
    const std::size_t h = pts.size();
    std::vector<ExtReal> history(h, ExtReal(0.0));
    ExtReal running{0.0};
    for (std::size_t j = 0; j < h; ++j) {
        for (std::size_t i = 0; i <= j; ++i) running = ext_max(running, dist(pts[i], pts[j]));
        history[j] = running;
    }
    DeltaEstimate est{running, false, h};
    if (running.is_infinite()) {
        est.possibly_unbounded = true;
    } else {
        const std::size_t quarter = std::max<std::size_t>(1, h / 4);
        if (h > quarter) {
            const double ref = history[h - quarter - 1].value();
            est.possibly_unbounded = running.value() > ref + plateau_rtol * ref ||
                                     (ref == 0.0 && running.value() > 0.0);
        }
    }
    return est;
}

} // namespace

DeltaEstimate delta_f(const Space& space, const CoupledOperator& f, const Point& x0, const Point& y0,
                      std::size_t horizon, double plateau_rtol) {
    if (horizon == 0) throw BadParams("delta_f needs horizon >= 1");
    Trajectory t = iterate(f, x0, y0, horizon);
    std::vector<Point> xs(t.xs.begin() + 1, t.xs.end());
    return running_sup(xs, [&](const Point& a, const Point& b) { return distance(space, a, b); }, plateau_rtol);
}

DeltaEstimate delta_tf(const PairSpace& plus_space, const CoupledOperator& f, const PairPoint& z0,
                       std::size_t horizon, double plateau_rtol) {
    if (horizon == 0) throw BadParams("delta_tf needs horizon >= 1");
    std::vector<PairPoint> zs;
    zs.reserve(horizon);
    PairPoint z = z0;
    for (std::size_t n = 1; n <= horizon; ++n) {
        z = apply_tf(f, z, n);
        zs.push_back(z);
    }
    return running_sup(zs, [&](const PairPoint& a, const PairPoint& b) { return distance(plus_space, a, b); },
                       plateau_rtol);
}

DeltaBounds delta_bounds(const Space& space, const CoupledOperator& f, const Point& x0, const Point& y0,
                         std::size_t horizon, double plateau_rtol) {
    DeltaBounds b{delta_f(space, f, x0, y0, horizon, plateau_rtol), delta_f(space, f, y0, x0, horizon, plateau_rtol),
                  ExtReal(0.0)};
    b.m = ext_max(b.forward.value, b.backward.value);
    return b;
}

CheckReport check_mixed_monotone(const OrderedPointSpace& ordered, const CoupledOperator& f, std::size_t sample_count,
                                 std::uint64_t seed, const CheckOptions& opts) {
    if (sample_count == 0) throw BadParams("check_mixed_monotone needs at least one sample");
    CheckReport report;
    report.axiom = "mixed_monotone";
    const Space& s = ordered.base;
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
        const Point x1 = s.sample(rng);
        const Point x2 = draw_above(ordered, rng, x1);
        const Point y = s.sample(rng);
        const Point y1 = s.sample(rng);
        const Point y2 = draw_above(ordered, rng, y1);
        const Point x = s.sample(rng);
        ++report.samples;
        try {
            if (ordered.leq(x1, x2)) {
                const Point lo = f(x1, y), hi = f(x2, y);
                if (!ordered.leq(lo, hi))
                    report.add_witness({{s.render(x1), s.render(x2), s.render(y)},
                                        0.0,
                                        0.0,
                                        "x1 <= x2 but F(x1,y)=" + s.render(lo) + " not <= F(x2,y)=" + s.render(hi)},
                                       opts.max_witnesses);
            }
            if (ordered.leq(y1, y2)) {
                const Point hi = f(x, y1), lo = f(x, y2);
                if (!ordered.leq(lo, hi))
                    report.add_witness({{s.render(x), s.render(y1), s.render(y2)},
                                        0.0,
                                        0.0,
                                        "y1 <= y2 but F(x,y1)=" + s.render(hi) + " not >= F(x,y2)=" + s.render(lo)},
                                       opts.max_witnesses);
            }
        } catch (const IndeterminateForm&) {
            ++report.skipped;
        }
    }
    return report;
}

ContractionForm parse_contraction_form(std::string_view name) {
    if (name == "bhaskar_plus") return ContractionForm::bhaskar_plus;
    if (name == "max_form") return ContractionForm::max_form;
    if (name == "berinde") return ContractionForm::berinde;
    throw BadParams("unknown contraction form '" + std::string(name) + "'");
}

std::string_view to_string(ContractionForm form) noexcept {
    switch (form) {
    case ContractionForm::bhaskar_plus: return "bhaskar_plus";
    case ContractionForm::max_form: return "max_form";
    case ContractionForm::berinde: return "berinde";
    }
    return "unknown";
}

RatioOutcome contraction_ratio(const Space& base, const CoupledOperator& f, ContractionForm form,
                               const PairPoint& upper, const PairPoint& lower) {
    const Point& x = upper.first;
    const Point& y = upper.second;
    const Point& u = lower.first;
    const Point& v = lower.second;
    const ExtReal head = distance(base, f(x, y), f(u, v));
    ExtReal num{0.0}, den{0.0};
    switch (form) {
    case ContractionForm::bhaskar_plus:
        num = ext_scale(head, 2.0);
        den = d_plus(base, upper, lower);
        break;
    case ContractionForm::max_form:
        num = head;
        den = d_max(base, upper, lower);
        break;
    case ContractionForm::berinde:
        num = ext_add(head, distance(base, f(y, x), f(v, u)));
        den = d_plus(base, upper, lower);
        break;
    }
    RatioOutcome out{RatioKind::finite, {upper, lower, num, den, ExtReal(0.0)}};
    const ExtReal zero{0.0};
    if (num == zero && den == zero) {
        out.kind = RatioKind::zero_zero;
    } else if (num.is_infinite() && den.is_infinite()) {
        out.kind = RatioKind::inf_inf;
    } else if (den == zero || num.is_infinite()) {
        out.kind = RatioKind::violated;
        out.sample.ratio = ExtReal::pos_inf();
    } else {
        out.sample.ratio = ext_ratio(num, den);
    }
    return out;
}

ContractionEstimate estimate_contraction(const OrderedPointSpace& ordered, const CoupledOperator& f,
                                         ContractionForm form, std::size_t sample_count, std::uint64_t seed,
                                         double declared_k, double ratio_rtol, std::size_t max_witnesses) {
    if (!(declared_k >= 0.0 && declared_k < 1.0)) throw BadParams("declared_k must lie in [0, 1)");
    if (sample_count == 0) throw BadParams("estimate_contraction needs at least one sample");
    ContractionEstimate est;
    est.form = form;
    est.declared_k = declared_k;
    const ExtReal limit{declared_k * (1.0 + ratio_rtol)};
    const Space& s = ordered.base;
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
        const Point u = s.sample(rng);
        const Point v = s.sample(rng);
        const Point x = draw_above(ordered, rng, u);
        const Point y = draw_below(ordered, rng, v);
        ++est.samples;
        if (!ordered.leq(u, x) || !ordered.leq(y, v)) {
            ++est.skipped;
            continue;
        }
        RatioOutcome r;
        try {
            r = contraction_ratio(s, f, form, {x, y}, {u, v});
        } catch (const IndeterminateForm&) {
            ++est.skipped;
            continue;
        }
        if (r.kind == RatioKind::zero_zero || r.kind == RatioKind::inf_inf) {
            ++est.skipped;
            continue;
        }
        if (!est.worst || est.k_hat < r.sample.ratio) {
            est.k_hat = r.sample.ratio;
            est.worst = r.sample;
        }
        if (limit < r.sample.ratio && est.witnesses.size() < max_witnesses) est.witnesses.push_back(r.sample);
    }
    est.pass = !(limit < est.k_hat);
    return est;
}

} // namespace jscfp
