#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>

#include "jscfp/ext_real.hpp"

namespace jscfp {

/// Element of a finite space, identified by its index.
struct Label {
    std::size_t index = 0;

    friend constexpr auto operator<=>(const Label&, const Label&) = default;
};

/// An element of a base space: an extended real or a finite label.
using Point = std::variant<ExtReal, Label>;

/// Throws DomainViolation if `p` is a label.
ExtReal real_of(const Point& p);
/// Throws DomainViolation if `p` is an extended real.
std::size_t label_of(const Point& p);

inline bool is_real(const Point& p) noexcept { return std::holds_alternative<ExtReal>(p); }

/// Reals render as to_string(ExtReal); labels as "#<index>".
std::string to_string(const Point& p);

/// An element of X^2.
struct PairPoint {
    Point first;
    Point second;

    friend bool operator==(const PairPoint&, const PairPoint&) = default;
};

std::string to_string(const PairPoint& p);

/// The pair with its components exchanged, (x, y) -> (y, x).
inline PairPoint swapped(const PairPoint& p) { return {p.second, p.first}; }

} // namespace jscfp
