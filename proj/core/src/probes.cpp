#include "jscfp/probes.hpp"

namespace jscfp {

std::string_view to_string(ProbeKind kind) noexcept {
    switch (kind) {
    case ProbeKind::uniqueness_comparable: return "uniqueness_comparable";
    case ProbeKind::uniqueness_bridged: return "uniqueness_bridged";
    case ProbeKind::component_equality: return "component_equality";
    }
    return "unknown";
}

std::string_view to_string(ProbeVerdict verdict) noexcept {
    switch (verdict) {
    case ProbeVerdict::same: return "same";
    case ProbeVerdict::distinct: return "distinct";
    case ProbeVerdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(ComponentCase c) noexcept {
    switch (c) {
    case ComponentCase::case_i: return "I";
    case ComponentCase::case_ii: return "II";
    case ComponentCase::case_iii: return "III";
    }
    return "unknown";
}

ComponentCase parse_component_case(std::string_view name) {
    if (name == "I" || name == "i" || name == "case_i") return ComponentCase::case_i;
    if (name == "II" || name == "ii" || name == "case_ii") return ComponentCase::case_ii;
    if (name == "III" || name == "iii" || name == "case_iii") return ComponentCase::case_iii;
    throw BadParams("unknown component-equality case '" + std::string(name) + "'");
}

bool is_approximate_fixed_point(const Space& space, const CoupledOperator& f, const PairPoint& p, double tol) {
    PairPoint image;
    try {
        image = apply_tf(f, p);
    } catch (const EvaluationError&) {
        return false;
    }
    if (space.equals(image.first, p.first) && space.equals(image.second, p.second)) return true;
    const ExtReal r = ext_add(distance(space, image.first, p.first), distance(space, image.second, p.second));
    return r <= ExtReal(tol);
}

namespace {

void require_fixed(const Space& space, const CoupledOperator& f, const PairPoint& p, double tol, const char* name) {
    if (!is_approximate_fixed_point(space, f, p, tol))
        throw PreconditionFailed(std::string(name) + " = " + to_string(p) + " is not a coupled fixed point within " +
                                 to_string(ExtReal(tol)));
}

void require_finite(ExtReal d, const std::string& what) {
    if (d.is_infinite()) throw PreconditionFailed(what + " is infinite");
}

bool pair_comparable(const OrderedPointSpace& ordered, const PairPoint& a, const PairPoint& b) {
    return pair_leq(ordered, a, b) || pair_leq(ordered, b, a);
}

// Appends a value and its bound, updating the curve flags.
void record(DecayCurve& c, ExtReal value, std::optional<ExtReal> bound, double slack) {
    c.values.push_back(value);
    if (bound) {
        c.bounds.push_back(*bound);
        if (!within(value, *bound, kDefaultRatioRtol)) c.within_bounds = false;
    }
    if (value <= ExtReal(slack)) c.decayed = true;
}

bool last_decayed(const DecayCurve& c, double slack) { return !c.values.empty() && c.values.back() <= ExtReal(slack); }

} // namespace

ProbeReport probe_uniqueness_comparable(const OrderedPointSpace& ordered, const CoupledOperator& f, const PairPoint& p,
                                        const PairPoint& q, const SolveConfig& cfg) {
    cfg.validate();
    const Space& space = ordered.base;
    require_fixed(space, f, p, cfg.residual_tol, "p");
    require_fixed(space, f, q, cfg.residual_tol, "q");
    if (!pair_comparable(ordered, p, q))
        throw PreconditionFailed(to_string(p) + " and " + to_string(q) + " are not comparable");

    ProbeReport r;
    r.kind = ProbeKind::uniqueness_comparable;
    r.slack = cfg.slack();
    r.distance = d_plus(space, p, q);
    require_finite(r.distance, "D+(p, q)");

    if (space.equals(p.first, q.first) && space.equals(p.second, q.second)) {
        r.verdict = ProbeVerdict::same;
        r.pass = true;
        r.note = "p and q coincide";
        return r;
    }
    if (r.distance <= ExtReal(r.slack)) {
        r.verdict = ProbeVerdict::same;
        r.pass = true;
        r.note = "D+(p, q) is within the tolerance slack";
        return r;
    }
    r.verdict = ProbeVerdict::distinct;
    if (r.distance > ExtReal(0.0)) {
        const ExtReal image = d_plus(space, apply_tf(f, p), apply_tf(f, q));
        r.certificate = ext_ratio(image, r.distance);
    }
    r.note = "distinct comparable fixed points: the contraction fails between them";
    return r;
}

ProbeReport probe_uniqueness_bridged(const OrderedPointSpace& ordered, const CoupledOperator& f, const PairPoint& p,
                                     const PairPoint& q, const PairPoint& bridge, const SolveConfig& cfg) {
    cfg.validate();
    const Space& space = ordered.base;
    require_fixed(space, f, p, cfg.residual_tol, "p");
    require_fixed(space, f, q, cfg.residual_tol, "q");
    if (!pair_comparable(ordered, bridge, p))
        throw PreconditionFailed("bridge " + to_string(bridge) + " is not comparable to " + to_string(p));
    if (!pair_comparable(ordered, bridge, q))
        throw PreconditionFailed("bridge " + to_string(bridge) + " is not comparable to " + to_string(q));
    require_finite(distance(space, p.first, bridge.first), "D(x, z1)");
    require_finite(distance(space, p.second, bridge.second), "D(y, z2)");
    require_finite(distance(space, q.first, bridge.first), "D(x*, z1)");
    require_finite(distance(space, q.second, bridge.second), "D(y*, z2)");

    ProbeReport r;
    r.kind = ProbeKind::uniqueness_bridged;
    r.slack = cfg.slack();
    r.distance = d_plus(space, p, q);

    DecayCurve to_p;
    to_p.label = "D+(T^n bridge, p)";
    DecayCurve to_q;
    to_q.label = "D+(T^n bridge, q)";
    const ExtReal start_p = d_plus(space, bridge, p);
    const ExtReal start_q = d_plus(space, bridge, q);
    PairPoint z = bridge;
    double kpow = 1.0;
    for (std::size_t n = 0;; ++n) {
        const ExtReal extra{r.slack};
        record(to_p, d_plus(space, z, p), ext_add(ext_scale(start_p, kpow), extra), r.slack);
        record(to_q, d_plus(space, z, q), ext_add(ext_scale(start_q, kpow), extra), r.slack);
        if ((last_decayed(to_p, r.slack) && last_decayed(to_q, r.slack)) || n == cfg.max_iters) break;
        z = apply_tf(f, z, n + 1);
        kpow *= cfg.declared_k;
    }
    const bool decayed = last_decayed(to_p, r.slack) && last_decayed(to_q, r.slack);
    r.pass = decayed && to_p.within_bounds && to_q.within_bounds;
    r.verdict = r.pass ? ProbeVerdict::same : ProbeVerdict::inconclusive;
    r.note = r.pass ? "both decay curves reach the slack; limits are unique"
                    : (decayed ? "decay curves exceed the k^n bound" : "decay curves did not reach the slack");
    r.curves = {std::move(to_p), std::move(to_q)};
    return r;
}

namespace {

std::optional<ProbeReport> try_case_iii(const OrderedPointSpace& ordered, const CoupledOperator& f,
                                        const PairPoint& fp, const std::optional<PairPoint>& x0y0,
                                        const SolveConfig& cfg, std::string& why) {
    const Space& space = ordered.base;
    if (!x0y0) {
        why = "case III needs a starting pair";
        return std::nullopt;
    }
    const Point& x0 = x0y0->first;
    const Point& y0 = x0y0->second;
    if (!comparable(ordered, x0, y0)) {
        why = "case III: x0 and y0 are not comparable";
        return std::nullopt;
    }
    const ExtReal d0 = distance(space, x0, y0);
    if (d0.is_infinite()) {
        why = "case III: D(x0, y0) is infinite";
        return std::nullopt;
    }

    ProbeReport r;
    r.kind = ProbeKind::component_equality;
    r.case_fired = ComponentCase::case_iii;
    r.slack = cfg.slack();
    DecayCurve c;
    c.label = "D(F^n(x0,y0), F^n(y0,x0))";
    const ExtReal extra{r.slack};
    PairPoint z = *x0y0;
    double kpow = 1.0; // k^(n-1)
    bool reached = false;
    for (std::size_t n = 0;; ++n) {
        const ExtReal d = distance(space, z.first, z.second);
        record(c, d, n == 0 ? d : ext_add(ext_scale(d0, kpow), extra), r.slack);
        if (n > 0) kpow *= cfg.declared_k;
        if (d <= extra && d_plus(space, z, fp) <= extra) {
            reached = true;
            break;
        }
        if (n == cfg.max_iters) break;
        z = apply_tf(f, z, n + 1);
    }
    if (!reached) {
        why = "case III: the trace from " + to_string(*x0y0) + " does not reach " + to_string(fp);
        return std::nullopt;
    }
    r.distance = distance(space, fp.first, fp.second);
    r.pass = c.within_bounds;
    r.verdict = r.pass ? ProbeVerdict::same : ProbeVerdict::inconclusive;
    r.note = r.pass ? "D(x_n, y_n) decays within k^(n-1) D(x0, y0)" : "D(x_n, y_n) exceeds k^(n-1) D(x0, y0)";
    r.curves.push_back(std::move(c));
    return r;
}

std::optional<ProbeReport> try_case_i(const OrderedPointSpace& ordered, const PairPoint& fp, const SolveConfig& cfg,
                                      std::string& why) {
    const Space& space = ordered.base;
    if (!comparable(ordered, fp.first, fp.second)) {
        why = "case I: x and y are not comparable";
        return std::nullopt;
    }
    const ExtReal d = distance(space, fp.first, fp.second);
    if (d.is_infinite()) {
        why = "case I: D(x, y) is infinite";
        return std::nullopt;
    }
    ProbeReport r;
    r.kind = ProbeKind::component_equality;
    r.case_fired = ComponentCase::case_i;
    r.slack = cfg.slack();
    r.distance = d;
    r.pass = d <= ExtReal(r.slack);
    r.verdict = r.pass ? ProbeVerdict::same : ProbeVerdict::distinct;
    r.note = r.pass ? "D(x, y) is within the slack" : "D(x, y) exceeds the slack";
    return r;
}

bool is_common_bound(const OrderedPointSpace& ordered, const Point& z, const PairPoint& fp) {
    const bool upper = ordered.leq(fp.first, z) && ordered.leq(fp.second, z);
    const bool lower = ordered.leq(z, fp.first) && ordered.leq(z, fp.second);
    if (!upper && !lower) return false;
    const Space& space = ordered.base;
    return distance(space, fp.first, z).is_finite() && distance(space, fp.second, z).is_finite();
}

std::optional<ProbeReport> try_case_ii(const OrderedPointSpace& ordered, const CoupledOperator& f,
                                       const PairPoint& fp, const SolveConfig& cfg, const ComponentProbeOptions& opts,
                                       std::string& why) {
    const Space& space = ordered.base;
    std::optional<Point> bound;
    if (opts.bound) {
        if (!space.contains(*opts.bound)) throw DomainViolation(space.render(*opts.bound) + " is outside " + space.name);
        if (is_common_bound(ordered, *opts.bound, fp)) bound = opts.bound;
    } else {
        Rng rng(cfg.seed);
        for (std::size_t i = 0; i < opts.bound_attempts && !bound; ++i) {
            const Point z = i % 2 == 0 ? space.sample(rng) : draw_above(ordered, rng, fp.first);
            if (is_common_bound(ordered, z, fp)) bound = z;
        }
    }
    if (!bound) {
        why = "case II: no common bound of x and y at finite distance";
        return std::nullopt;
    }

    ProbeReport r;
    r.kind = ProbeKind::component_equality;
    r.case_fired = ComponentCase::case_ii;
    r.slack = cfg.slack();
    r.distance = distance(space, fp.first, fp.second);
    r.common_bound = bound;
    DecayCurve to_x;
    to_x.label = "D(x, F^n(x,z))";
    DecayCurve to_y;
    to_y.label = "D(F^n(z,x), y)";
    DecayCurve gap;
    gap.label = "D(F^n(x,z), F^n(z,x))";
    PairPoint w{fp.first, *bound};
    bool done = false;
    for (std::size_t n = 0;; ++n) {
        record(to_x, distance(space, fp.first, w.first), std::nullopt, r.slack);
        record(to_y, distance(space, w.second, fp.second), std::nullopt, r.slack);
        record(gap, distance(space, w.first, w.second), std::nullopt, r.slack);
        done = last_decayed(to_x, r.slack) && last_decayed(to_y, r.slack) && last_decayed(gap, r.slack);
        if (done || n == cfg.max_iters) break;
        w = apply_tf(f, w, n + 1);
    }
    r.pass = done;
    r.verdict = done ? ProbeVerdict::same : ProbeVerdict::inconclusive;
    r.note = done ? "all three decays reach the slack; x = y by the case II argument"
                  : "the decays did not reach the slack together";
    r.curves = {std::move(to_x), std::move(to_y), std::move(gap)};
    return r;
}

} // namespace

ProbeReport probe_component_equality(const OrderedPointSpace& ordered, const CoupledOperator& f, const PairPoint& fp,
                                     const std::optional<PairPoint>& x0y0, const SolveConfig& cfg,
                                     const ComponentProbeOptions& opts) {
    cfg.validate();
    require_fixed(ordered.base, f, fp, cfg.residual_tol, "fp");

    std::vector<std::string> reasons;
    auto want = [&](ComponentCase c) { return !opts.force || *opts.force == c; };
    std::string why;
    if (want(ComponentCase::case_iii)) {
        if (auto r = try_case_iii(ordered, f, fp, x0y0, cfg, why)) return *r;
        reasons.push_back(why);
    }
    if (want(ComponentCase::case_i)) {
        if (auto r = try_case_i(ordered, fp, cfg, why)) return *r;
        reasons.push_back(why);
    }
    if (want(ComponentCase::case_ii)) {
        if (auto r = try_case_ii(ordered, f, fp, cfg, opts, why)) return *r;
        reasons.push_back(why);
    }
    std::string msg = "no component-equality case applies to " + to_string(fp);
    for (const auto& s : reasons) msg += "; " + s;
    throw PreconditionFailed(msg);
}

} // namespace jscfp
