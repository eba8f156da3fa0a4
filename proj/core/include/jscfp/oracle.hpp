#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jscfp/probes.hpp"

namespace jscfp {

inline constexpr std::size_t kMaxOracleLabels = 64;

/// A small space given by tables: distance[i][j], leq[i][j] (i <= j) and f[i][j] = F(i, j).
struct FiniteInstance {
    std::vector<std::string> labels;
    std::vector<std::vector<ExtReal>> distance;
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<std::size_t>> f;

    std::size_t size() const noexcept { return labels.size(); }

    /// Shapes, symmetry, nonnegativity, partial-order laws and the label cap.
    /// Throws BadParams.
    void validate() const;

    Space to_space() const;
    OrderedPointSpace to_ordered_space() const;
    CoupledOperator to_operator() const;
};

/// Every (x, y) with f[x][y] = x and f[y][x] = y, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> enumerate_coupled_fixed_points(const FiniteInstance& inst);

/// The maximum contraction ratio over all comparable quadruples (x >= u, y <= v),
/// read straight from the tables. +inf if some nonzero numerator meets a zero
/// denominator; 0/0 and inf/inf quadruples are skipped.
ExtReal exact_contraction_constant(const FiniteInstance& inst, ContractionForm form);

/// Mixed monotonicity checked on every triple.
bool exact_mixed_monotone(const FiniteInstance& inst);

struct OracleRun {
    std::size_t x0 = 0;
    std::size_t y0 = 0;
    SolveStatus status = SolveStatus::max_iters;
    std::optional<std::pair<std::size_t, std::size_t>> candidate;
    std::size_t iterations = 0;
    bool in_list = false;
};

struct OracleReport {
    std::size_t labels = 0;
    ContractionForm form = ContractionForm::bhaskar_plus;
    std::vector<std::pair<std::size_t, std::size_t>> fixed_points;
    ExtReal exact_k{0.0};
    bool mixed_monotone = false;
    ExtReal sampled_k_hat{0.0};
    std::vector<OracleRun> runs;
    std::size_t probes_checked = 0;
    bool pass = false;
};

/**
 * Runs the solver from every start satisfying the order hypothesis and checks
 * its candidates against the enumerated fixed points, the uniqueness probe
 * against exact comparisons, and the sampled contraction estimate against the
 * exact constant.
 *
 * Throws PreconditionFailed if the exact constant is >= 1 or no start is
 * valid, and OracleMismatch on any disagreement.
 */
OracleReport cross_check(const FiniteInstance& inst, const SolveConfig& cfg);

/**
 * A seeded contractive instance: a forest ordered by ancestry whose weights
 * grow geometrically with depth, D(a, b) = w_a + w_b for a != b, and F moving
 * the first argument towards its root. Exact bhaskar_plus constant < 1.
 */
FiniteInstance engineered_instance(std::uint64_t seed);

} // namespace jscfp
