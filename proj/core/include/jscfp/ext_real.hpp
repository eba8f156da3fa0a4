#pragma once

#include <compare>
#include <limits>
#include <string>
#include <string_view>

namespace jscfp {

/**
 * An element of the affinely extended reals [-inf, +inf].
 *
 * Stored as a double whose infinities encode the two infinite points. NaN is
 * rejected on construction, so the order below is total and every value is
 * exactly one of {finite, +inf, -inf}. Finite overflow saturates to the
 * corresponding infinity, which is what the extended line prescribes.
 */
class ExtReal {
public:
    constexpr ExtReal() noexcept = default;

    // Implicit on purpose: ExtReal is used like a numeric type throughout.
    ExtReal(double v);

    static constexpr ExtReal pos_inf() noexcept { return ExtReal(Raw{}, std::numeric_limits<double>::infinity()); }
    static constexpr ExtReal neg_inf() noexcept { return ExtReal(Raw{}, -std::numeric_limits<double>::infinity()); }

    constexpr bool is_finite() const noexcept { return v_ == v_ && v_ - v_ == 0.0; }
    constexpr bool is_pos_inf() const noexcept { return v_ == std::numeric_limits<double>::infinity(); }
    constexpr bool is_neg_inf() const noexcept { return v_ == -std::numeric_limits<double>::infinity(); }
    constexpr bool is_infinite() const noexcept { return !is_finite(); }

    /// The underlying double; +-inf for the infinite points.
    constexpr double value() const noexcept { return v_; }

    friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
    friend constexpr std::weak_ordering operator<=>(ExtReal a, ExtReal b) noexcept {
        if (a.v_ < b.v_) return std::weak_ordering::less;
        if (b.v_ < a.v_) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }

private:
    struct Raw {};
    constexpr ExtReal(Raw, double v) noexcept : v_(v) {}

    double v_ = 0.0;
};

/// a + b. Throws IndeterminateForm for inf + (-inf).
ExtReal ext_add(ExtReal a, ExtReal b);
/// a - b. Throws IndeterminateForm for inf - inf and -inf - (-inf).
ExtReal ext_sub(ExtReal a, ExtReal b);
/// r * a for a finite scalar r. Throws IndeterminateForm for 0 * (+-inf).
ExtReal ext_scale(ExtReal a, double r);
ExtReal ext_abs(ExtReal a) noexcept;
ExtReal ext_neg(ExtReal a) noexcept;
/// a / b for nonnegative a, b, with 0/0 and inf/inf left to the caller.
ExtReal ext_ratio(ExtReal num, ExtReal den);

inline ExtReal ext_max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }
inline ExtReal ext_min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }

inline ExtReal operator+(ExtReal a, ExtReal b) { return ext_add(a, b); }
inline ExtReal operator-(ExtReal a, ExtReal b) { return ext_sub(a, b); }
inline ExtReal operator-(ExtReal a) noexcept { return ext_neg(a); }
inline ExtReal operator*(double r, ExtReal a) { return ext_scale(a, r); }
inline ExtReal operator*(ExtReal a, double r) { return ext_scale(a, r); }

/// "inf", "-inf", or the shortest decimal that reads back to the same double.
std::string to_string(ExtReal a);

/// Inverse of to_string. Also accepts "+inf", "infinity" and a ratio "p/q".
/// Throws BadParams on malformed text.
ExtReal parse_ext_real(std::string_view text);

} // namespace jscfp
