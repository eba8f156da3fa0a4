#pragma once

#include <cstddef>
#include <string_view>

#include "jscfp/metric_space.hpp"
#include "jscfp/point.hpp"

namespace jscfp {

using Space = MetricSpace<Point>;

enum class SpaceKind {
    standard_real,    ///< |x - y| on R
    dislocated_abs,   ///< |x| + |y| on R u {+-inf}
    b_metric_squared, ///< (x - y)^2 on R
    finite_discrete,  ///< 0/1 metric on n labels
};

struct SpaceParams {
    std::size_t labels = 0;     ///< finite_discrete only
    double sample_scale = 10.0; ///< spread of the finite real sampler
};

/// One of the bundled spaces. Throws BadParams on invalid parameters.
Space builtin_space(SpaceKind kind, const SpaceParams& params = {});

SpaceKind parse_space_kind(std::string_view name);
std::string_view to_string(SpaceKind kind) noexcept;

/// Draws a finite heavy-tailed real (Student t, 3 dof) scaled by `scale`.
double sample_finite_real(Rng& rng, double scale);

/// Draws from R u {+-inf}: 90% finite heavy-tailed, 5% each infinity.
ExtReal sample_extended_real(Rng& rng, double scale);

} // namespace jscfp
