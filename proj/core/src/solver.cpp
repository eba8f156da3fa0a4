#include "jscfp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace jscfp {

SolveMode parse_solve_mode(std::string_view name) {
    if (name == "bhaskar_plus") return SolveMode::bhaskar_plus;
    if (name == "bhaskar_max") return SolveMode::bhaskar_max;
    if (name == "berinde") return SolveMode::berinde;
    throw BadParams("unknown solve mode '" + std::string(name) + "'");
}

std::string_view to_string(SolveMode mode) noexcept {
    switch (mode) {
    case SolveMode::bhaskar_plus: return "bhaskar_plus";
    case SolveMode::bhaskar_max: return "bhaskar_max";
    case SolveMode::berinde: return "berinde";
    }
    return "unknown";
}

ContractionForm contraction_form_for(SolveMode mode) noexcept {
    switch (mode) {
    case SolveMode::bhaskar_plus: return ContractionForm::bhaskar_plus;
    case SolveMode::bhaskar_max: return ContractionForm::max_form;
    case SolveMode::berinde: return ContractionForm::berinde;
    }
    return ContractionForm::bhaskar_plus;
}

std::string_view to_string(SolveStatus status) noexcept {
    switch (status) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iters: return "max_iters";
    case SolveStatus::diverged: return "diverged";
    case SolveStatus::hypothesis_failed: return "hypothesis_failed";
    case SolveStatus::evaluation_error: return "evaluation_error";
    }
    return "unknown";
}

void SolveConfig::validate() const {
    if (max_iters < 1) throw BadParams("solve.max_iters must be >= 1");
    if (!(residual_tol > 0.0) || !std::isfinite(residual_tol)) throw BadParams("solve.residual_tol must be > 0");
    if (!(divergence_cap > ExtReal(0.0))) throw BadParams("solve.divergence_cap must be > 0");
    if (horizon_for_delta < 1) throw BadParams("solve.horizon_for_delta must be >= 1");
    if (!(declared_k >= 0.0 && declared_k < 1.0)) throw BadParams("solve.declared_k must lie in [0, 1)");
    if (verify_hypotheses && hypothesis_samples < 1) throw BadParams("solve.hypothesis_samples must be >= 1");
}

HypothesisReport check_hypotheses(const OrderedPointSpace& ordered, const CoupledOperator& f, const Point& x0,
                                  const Point& y0, const SolveConfig& cfg) {
    cfg.validate();
    const Space& space = ordered.base;
    HypothesisReport h;
    h.mode = cfg.mode;

    const PairPoint first = apply_tf(f, {x0, y0}, 1);
    h.order.forward = ordered.leq(x0, first.first) && ordered.leq(first.second, y0);
    h.order.backward = ordered.leq(first.first, x0) && ordered.leq(y0, first.second);
    h.order.pass = cfg.mode == SolveMode::berinde ? (h.order.forward || h.order.backward) : h.order.forward;

    h.deltas = delta_bounds(space, f, x0, y0, cfg.horizon_for_delta);
    h.delta_pair = delta_tf(lift_space(space, ProductMode::plus), f, {x0, y0}, cfg.horizon_for_delta);
    h.delta_pass = cfg.mode == SolveMode::berinde ? h.delta_pair.bounded() : h.deltas.bounded();

    h.mixed_monotone = check_mixed_monotone(ordered, f, cfg.hypothesis_samples, cfg.seed);
    h.contraction = estimate_contraction(ordered, f, contraction_form_for(cfg.mode), cfg.hypothesis_samples,
                                         cfg.seed + 1, cfg.declared_k);
    h.all_pass = h.order.pass && h.delta_pass && h.mixed_monotone.pass && h.contraction.pass;
    return h;
}

ExtReal residual_at(const Space& space, const CoupledOperator& f, const PairPoint& z) {
    const PairPoint next = apply_tf(f, z, 1);
    return ext_add(distance(space, next.first, z.first), distance(space, next.second, z.second));
}

namespace {

// One step of the run. Bhaskar modes follow the coupled recurrence on each
// coordinate; berinde mode applies T_F to the pair. The dynamics coincide.
PairPoint advance(const CoupledOperator& f, SolveMode mode, const PairPoint& z, std::size_t step) {
    if (mode == SolveMode::berinde) return apply_tf(f, z, step);
    Point x, y;
    try {
        x = f(z.first, z.second);
        y = f(z.second, z.first);
    } catch (const IndeterminateForm& e) {
        throw EvaluationError(e.what(), step);
    } catch (const DomainViolation& e) {
        throw EvaluationError(e.what(), step);
    }
    return {std::move(x), std::move(y)};
}

ExtReal measured_rate(const std::vector<ExtReal>& steps) {
    ExtReal rate{0.0};
    const std::size_t n = steps.size();
    for (std::size_t i = std::max<std::size_t>(1, n / 2); i + 1 < n; ++i) {
        const ExtReal a = steps[i], b = steps[i + 1];
        if (a > ExtReal(0.0) && a.is_finite() && b.is_finite()) rate = ext_max(rate, ext_ratio(b, a));
    }
    return rate;
}

} // namespace

SolveReport solve(const OrderedPointSpace& ordered, const CoupledOperator& f, const Point& x0, const Point& y0,
                  const SolveConfig& cfg) {
    cfg.validate();
    const Space& space = ordered.base;
    SolveReport r;
    PairPoint z{x0, y0};
    r.trace.push(z);
    r.steps.push_back(ExtReal(0.0));

    try {
        if (cfg.verify_hypotheses) r.hypotheses = check_hypotheses(ordered, f, x0, y0, cfg);

        PairPoint next = advance(f, cfg.mode, z, 1);
        auto coupled_residual = [&](const PairPoint& at, const PairPoint& image) {
            return ext_add(distance(space, image.first, at.first), distance(space, image.second, at.second));
        };
        r.residuals.push_back(coupled_residual(z, next));

        bool done = false;
        for (std::size_t n = 0; !done; ++n) {
            const ExtReal step = d_plus(space, z, next);
            if (cfg.divergence_cap < step) {
                r.status = SolveStatus::diverged;
                r.residual = r.residuals.back();
                r.iterations = n;
                break;
            }
            if (n == cfg.max_iters) {
                r.status = SolveStatus::max_iters;
                r.residual = r.residuals.back();
                r.iterations = n;
                break;
            }
            PairPoint after = advance(f, cfg.mode, next, n + 2);
            const ExtReal res = coupled_residual(next, after);
            r.trace.push(next);
            r.steps.push_back(step);
            r.residuals.push_back(res);
            if (step <= ExtReal(cfg.residual_tol) && res <= ExtReal(cfg.residual_tol)) {
                r.status = SolveStatus::converged;
                r.candidate = next;
                r.residual = res;
                r.iterations = n + 1;
                done = true;
            }
            z = std::move(next);
            next = std::move(after);
        }
    } catch (const EvaluationError& e) {
        r.status = SolveStatus::evaluation_error;
        r.error = e.what();
        r.candidate.reset();
        // The last recorded point has no image, so its residual is unknown.
        if (r.residuals.size() < r.trace.size()) r.residuals.push_back(ExtReal::pos_inf());
        r.residual = r.residuals.back();
        r.iterations = r.trace.size() - 1;
        return r;
    }

    if (r.status == SolveStatus::max_iters && r.hypotheses && !r.hypotheses->all_pass)
        r.status = SolveStatus::hypothesis_failed;
    r.measured_rate = measured_rate(r.steps);
    return r;
}

RateReport verify_rate(const Space& space, const SolveReport& report, double k, ExtReal m, double tol) {
    const Trajectory& t = report.trace;
    if (t.size() < 3) throw BadParams("verify_rate needs a trace of length >= 3");
    if (!m.is_finite()) throw BadParams("verify_rate needs a finite M");
    if (!(k >= 0.0 && k < 1.0)) throw BadParams("verify_rate needs k in [0, 1)");
    RateReport out;
    const std::size_t len = t.size();
    double kpow = 1.0; // k^(n-1)
    for (std::size_t n = 1; n < len; ++n, kpow *= k) {
        const ExtReal bound = ext_scale(m, kpow);
        for (std::size_t p = 1; n + p < len; ++p) {
            for (char c : {'x', 'y'}) {
                const auto& seq = c == 'x' ? t.xs : t.ys;
                const ExtReal lhs = distance(space, seq[n], seq[n + p]);
                ++out.checked;
                if (!within(lhs, bound, tol)) {
                    out.pass = false;
                    out.violation = RateViolation{n, p, c, lhs, bound};
                    return out;
                }
            }
        }
    }
    return out;
}

namespace {

std::string csv_value(const Point& p) {
    if (const auto* l = std::get_if<Label>(&p)) return std::to_string(l->index);
    const ExtReal r = std::get<ExtReal>(p);
    if (r.is_infinite()) return to_string(r);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r.value());
    return buf;
}

} // namespace

void write_trace_csv(std::ostream& out, const SolveReport& report) {
    out << "n,x_n,y_n,step_dplus,residual\n";
    const Trajectory& t = report.trace;
    for (std::size_t n = 0; n < t.size(); ++n) {
        out << n << ',' << csv_value(t.xs[n]) << ',' << csv_value(t.ys[n]) << ',';
        if (n > 0 && n < report.steps.size()) out << csv_value(report.steps[n]);
        out << ',';
        if (n < report.residuals.size()) out << csv_value(report.residuals[n]);
        out << '\n';
    }
}

} // namespace jscfp
