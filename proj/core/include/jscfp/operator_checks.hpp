#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "jscfp/coupled_operator.hpp"
#include "jscfp/product.hpp"

namespace jscfp {

/**
 * Finite-horizon estimate of a supremum over iterate pairs.
 *
 * `value` is a lower bound of the true supremum. `possibly_unbounded` is set
 * when the running maximum still grew (relative to `plateau_rtol`) during the
 * final quarter of the horizon, or when the value is +inf.
 */
struct DeltaEstimate {
    ExtReal value;
    bool possibly_unbounded = false;
    std::size_t horizon = 0;

    bool bounded() const noexcept { return value.is_finite() && !possibly_unbounded; }
};

inline constexpr std::size_t kDefaultDeltaHorizon = 64;
inline constexpr double kDefaultPlateauRtol = 1e-6;

/// max D(x_i, x_j) over 1 <= i, j <= horizon along the coupled trajectory from (x0, y0).
DeltaEstimate delta_f(const Space& space, const CoupledOperator& f, const Point& x0, const Point& y0,
                      std::size_t horizon = kDefaultDeltaHorizon, double plateau_rtol = kDefaultPlateauRtol);

/// max D+(T^i z0, T^j z0) over 1 <= i, j <= horizon. `plus_space` is the D+ lift.
DeltaEstimate delta_tf(const PairSpace& plus_space, const CoupledOperator& f, const PairPoint& z0,
                       std::size_t horizon = kDefaultDeltaHorizon, double plateau_rtol = kDefaultPlateauRtol);

/// Both coordinate deltas and M = max of the two.
struct DeltaBounds {
    DeltaEstimate forward;  // delta_F(D, (x0, y0))
    DeltaEstimate backward; // delta_F(D, (y0, x0))
    ExtReal m;

    bool bounded() const noexcept { return forward.bounded() && backward.bounded(); }
};

DeltaBounds delta_bounds(const Space& space, const CoupledOperator& f, const Point& x0, const Point& y0,
                         std::size_t horizon = kDefaultDeltaHorizon, double plateau_rtol = kDefaultPlateauRtol);

/// x1 <= x2 => F(x1,y) <= F(x2,y) and y1 <= y2 => F(x,y1) >= F(x,y2), on sampled triples.
/// Samples whose evaluation is indeterminate are counted in `skipped`.
CheckReport check_mixed_monotone(const OrderedPointSpace& ordered, const CoupledOperator& f, std::size_t sample_count,
                                 std::uint64_t seed, const CheckOptions& opts = {});

enum class ContractionForm {
    bhaskar_plus, ///< 2 D(F(x,y),F(u,v)) / D+
    max_form,     ///< D(F(x,y),F(u,v)) / Dm
    berinde,      ///< D+(T_F(x,y), T_F(u,v)) / D+
};

ContractionForm parse_contraction_form(std::string_view name);
std::string_view to_string(ContractionForm form) noexcept;

/// Left and right side of a contraction inequality on one comparable quadruple
/// (x >= u, y <= v), with the 1/2 of the D+ form folded into the numerator.
struct ContractionSample {
    PairPoint upper; // (x, y)
    PairPoint lower; // (u, v)
    ExtReal numerator;
    ExtReal denominator;
    ExtReal ratio;
};

enum class RatioKind {
    finite,     ///< ordinary ratio
    violated,   ///< nonzero numerator over zero, or inf over finite: ratio +inf
    zero_zero,  ///< 0/0, no information
    inf_inf,    ///< inf <= k * inf holds for k > 0, no ratio
};

struct RatioOutcome {
    RatioKind kind;
    ContractionSample sample;
};

/// Evaluates one quadruple. Propagates IndeterminateForm from F.
RatioOutcome contraction_ratio(const Space& base, const CoupledOperator& f, ContractionForm form,
                               const PairPoint& upper, const PairPoint& lower);

struct ContractionEstimate {
    ContractionForm form = ContractionForm::bhaskar_plus;
    double declared_k = 0.0;
    ExtReal k_hat{0.0};
    bool pass = true;
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::optional<ContractionSample> worst;
    std::vector<ContractionSample> witnesses; // samples with ratio above declared_k
};

inline constexpr double kDefaultRatioRtol = 1e-9;

/**
 * Samples comparable quadruples (draw (u,v), then x >= u and y <= v) and
 * records the largest observed ratio of the selected contraction form.
 *
 * pass iff k_hat <= declared_k * (1 + ratio_rtol). Zero-denominator samples
 * with a nonzero numerator count as ratio +inf.
 */
ContractionEstimate estimate_contraction(const OrderedPointSpace& ordered, const CoupledOperator& f,
                                         ContractionForm form, std::size_t sample_count, std::uint64_t seed,
                                         double declared_k, double ratio_rtol = kDefaultRatioRtol,
                                         std::size_t max_witnesses = 16);

} // namespace jscfp
