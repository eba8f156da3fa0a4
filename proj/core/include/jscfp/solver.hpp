#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jscfp/operator_checks.hpp"

namespace jscfp {

enum class SolveMode {
    bhaskar_plus, ///< coupled recurrence, contraction k/2 * D+
    bhaskar_max,  ///< coupled recurrence, contraction k * Dm
    berinde,      ///< Picard iteration of T_F, contraction k * D+ on T_F
};

SolveMode parse_solve_mode(std::string_view name);
std::string_view to_string(SolveMode mode) noexcept;
ContractionForm contraction_form_for(SolveMode mode) noexcept;

struct SolveConfig {
    SolveMode mode = SolveMode::bhaskar_plus;
    std::size_t max_iters = 10000;
    double residual_tol = 1e-9;
    ExtReal divergence_cap{1e12};
    std::size_t horizon_for_delta = kDefaultDeltaHorizon;
    double declared_k = 0.9;
    std::size_t hypothesis_samples = 1000;
    std::uint64_t seed = 0;
    bool verify_hypotheses = true;

    /// Throws BadParams naming the offending field.
    void validate() const;

    /// Additive slack 2 * residual_tol / (1 - k) used by every k^n bound on approximate fixed points.
    double slack() const noexcept { return 2.0 * residual_tol / (1.0 - declared_k); }
};

struct OrderCondition {
    bool forward = false;  ///< x0 <= F(x0,y0) and y0 >= F(y0,x0)
    bool backward = false; ///< x0 >= F(x0,y0) and y0 <= F(y0,x0)
    bool pass = false;     ///< forward, or either orientation in berinde mode
};

struct HypothesisReport {
    SolveMode mode = SolveMode::bhaskar_plus;
    OrderCondition order;
    DeltaBounds deltas;           // coordinate deltas and M
    DeltaEstimate delta_pair;     // delta(D+, T_F, z0)
    bool delta_pass = false;      // per mode: both coordinate deltas, or the pair delta
    CheckReport mixed_monotone;
    ContractionEstimate contraction;
    bool all_pass = false;
};

HypothesisReport check_hypotheses(const OrderedPointSpace& ordered, const CoupledOperator& f, const Point& x0,
                                  const Point& y0, const SolveConfig& cfg);

enum class SolveStatus { converged, max_iters, diverged, hypothesis_failed, evaluation_error };

std::string_view to_string(SolveStatus status) noexcept;

struct SolveReport {
    SolveStatus status = SolveStatus::max_iters;
    std::optional<PairPoint> candidate;
    /// D(F(x,y),x) + D(F(y,x),y) at the candidate (or at the last point reached).
    ExtReal residual = ExtReal::pos_inf();
    Trajectory trace;
    /// step[n] = D+(z_{n-1}, z_n) for n >= 1; step[0] is unused and 0.
    std::vector<ExtReal> steps;
    /// residuals[n] = D+(T_F z_n, z_n).
    std::vector<ExtReal> residuals;
    std::optional<HypothesisReport> hypotheses;
    /// Largest successive-step ratio over the final half of the run.
    ExtReal measured_rate{0.0};
    std::size_t iterations = 0;
    std::string error;
};

/// Coupled residual D(F(x,y),x) + D(F(y,x),y).
ExtReal residual_at(const Space& space, const CoupledOperator& f, const PairPoint& z);

/**
 * Iterates from (x0, y0) until D+(z_n, z_{n+1}) <= tol and the residual at
 * z_{n+1} is <= tol (converged), a step exceeds the divergence cap
 * (diverged), or max_iters is reached. Hypotheses are checked first and
 * reported but never block the run; a run that then fails to converge within
 * max_iters is reported as hypothesis_failed.
 */
SolveReport solve(const OrderedPointSpace& ordered, const CoupledOperator& f, const Point& x0, const Point& y0,
                  const SolveConfig& cfg);

struct RateViolation {
    std::size_t n = 0;
    std::size_t p = 0;
    char coordinate = 'x';
    ExtReal lhs;
    ExtReal bound;
};

struct RateReport {
    bool pass = true;
    std::size_t checked = 0;
    std::optional<RateViolation> violation;
};

/**
 * Checks D(x_n, x_{n+p}) <= k^(n-1) * M (and likewise for y) for every
 * recorded n >= 1, p >= 1, where M bounds D over iterate pairs with indices
 * >= 1. Returns the first violation, if any.
 */
RateReport verify_rate(const Space& space, const SolveReport& report, double k, ExtReal m, double tol = 1e-9);

/// CSV with header n,x_n,y_n,step_dplus,residual; reals printed with 17 significant digits.
void write_trace_csv(std::ostream& out, const SolveReport& report);

} // namespace jscfp
