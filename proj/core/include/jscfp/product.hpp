#pragma once

#include <string_view>

#include "jscfp/builtin_spaces.hpp"
#include "jscfp/order.hpp"
#include "jscfp/point.hpp"

namespace jscfp {

using PairSpace = MetricSpace<PairPoint>;
using OrderedPairSpace = OrderedSpace<PairPoint>;

/// D+((x,y),(u,v)) = D(x,u) + D(y,v). Never indeterminate: both terms are >= 0.
ExtReal d_plus(const Space& base, const PairPoint& a, const PairPoint& b);

/// Dm((x,y),(u,v)) = max{D(x,u), D(y,v)}.
ExtReal d_max(const Space& base, const PairPoint& a, const PairPoint& b);

/// (u,v) <= (x,y) iff u <= x and v >= y.
bool pair_leq(const OrderedPointSpace& ordered, const PairPoint& a, const PairPoint& b);

enum class ProductMode { plus, max };

ProductMode parse_product_mode(std::string_view name);
std::string_view to_string(ProductMode mode) noexcept;

/**
 * (X^2, D+) or (X^2, Dm) over the given base.
 *
 * Both factors share one base space, so the D3 constant of the product,
 * max{c1, c2}, equals the base constant.
 */
PairSpace lift_space(const Space& base, ProductMode mode);

/// lift_space plus the pair order of pair_leq.
OrderedPairSpace lift_order(const OrderedPointSpace& ordered, ProductMode mode);

} // namespace jscfp
