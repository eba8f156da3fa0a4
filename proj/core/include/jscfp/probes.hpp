#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jscfp/solver.hpp"

namespace jscfp {

enum class ProbeKind { uniqueness_comparable, uniqueness_bridged, component_equality };
enum class ProbeVerdict { same, distinct, inconclusive };
enum class ComponentCase { case_i, case_ii, case_iii };

std::string_view to_string(ProbeKind kind) noexcept;
std::string_view to_string(ProbeVerdict verdict) noexcept;
std::string_view to_string(ComponentCase c) noexcept;
ComponentCase parse_component_case(std::string_view name);

/// A distance sequence followed by a probe, with its k^n bound when one applies.
struct DecayCurve {
    std::string label;
    std::vector<ExtReal> values;
    std::vector<ExtReal> bounds; // empty when the curve has no bound
    bool decayed = false;        // some value fell to the slack
    bool within_bounds = true;   // every value respected its bound
};

struct ProbeReport {
    ProbeKind kind = ProbeKind::uniqueness_comparable;
    std::optional<ComponentCase> case_fired;
    ProbeVerdict verdict = ProbeVerdict::inconclusive;
    bool pass = false;
    /// D+(p, q) for the uniqueness probes; D(x, y) for component equality.
    ExtReal distance{0.0};
    double slack = 0.0;
    /// D+(T p, T q) / D+(p, q) when the points are distinct.
    std::optional<ExtReal> certificate;
    std::optional<Point> common_bound;
    std::vector<DecayCurve> curves;
    std::string note;
};

/// True iff T_F p equals p exactly, or the residual at p is <= tol.
bool is_approximate_fixed_point(const Space& space, const CoupledOperator& f, const PairPoint& p, double tol);

/**
 * Two comparable (approximate) coupled fixed points at finite D+ coincide
 * under the contraction. Verdict `same` when D+(p,q) is within the slack,
 * otherwise `distinct` with the observed T_F ratio as certificate.
 *
 * Throws PreconditionFailed if p or q is not a fixed point, they are
 * incomparable, or D+(p,q) is infinite.
 */
ProbeReport probe_uniqueness_comparable(const OrderedPointSpace& ordered, const CoupledOperator& f, const PairPoint& p,
                                        const PairPoint& q, const SolveConfig& cfg);

/**
 * Incomparable fixed points joined through a common upper or lower bound.
 * Iterates T_F from the bridge until both D+(T^n bridge, p) and
 * D+(T^n bridge, q) fall to the slack, checking each against k^n times its
 * starting value.
 *
 * Throws PreconditionFailed if the bridge is incomparable to p or q or one of
 * D(x,z1), D(y,z2), D(x*,z1), D(y*,z2) is infinite.
 */
ProbeReport probe_uniqueness_bridged(const OrderedPointSpace& ordered, const CoupledOperator& f, const PairPoint& p,
                                     const PairPoint& q, const PairPoint& bridge, const SolveConfig& cfg);

struct ComponentProbeOptions {
    /// Common bound for case II; sampled when absent.
    std::optional<Point> bound;
    /// Try only this case.
    std::optional<ComponentCase> force;
    std::size_t bound_attempts = 100;
};

/**
 * Equality x = y of the components of a fixed point fp = (x, y).
 *
 * Cases are tried in the order III, I, II:
 *  - III: x0y0 given, x0 and y0 comparable at finite distance, and the
 *    coupled trace from it reaches fp. Checks D(x_n, y_n) <= k^(n-1) D(x0,y0).
 *  - I: x and y comparable at finite distance. Checks D(x, y) <= slack.
 *  - II: a common bound z of x and y at finite distances. Follows
 *    D(x, F^n(x,z)), D(F^n(z,x), y) and D(F^n(x,z), F^n(z,x)) to the slack.
 *
 * Throws PreconditionFailed if fp is not a fixed point or no case applies.
 */
ProbeReport probe_component_equality(const OrderedPointSpace& ordered, const CoupledOperator& f, const PairPoint& fp,
                                     const std::optional<PairPoint>& x0y0, const SolveConfig& cfg,
                                     const ComponentProbeOptions& opts = {});

} // namespace jscfp
