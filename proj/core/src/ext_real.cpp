#include "jscfp/ext_real.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "jscfp/errors.hpp"

namespace jscfp {

ExtReal::ExtReal(double v) : v_(v) {
    if (std::isnan(v)) throw std::invalid_argument("NaN is not an extended real");
}

ExtReal ext_add(ExtReal a, ExtReal b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
        throw IndeterminateForm("inf + (-inf) is undefined");
    return ExtReal(a.value() + b.value());
}

ExtReal ext_sub(ExtReal a, ExtReal b) {
    if ((a.is_pos_inf() && b.is_pos_inf()) || (a.is_neg_inf() && b.is_neg_inf()))
        throw IndeterminateForm(to_string(a) + " - " + to_string(b) + " is undefined");
    return ExtReal(a.value() - b.value());
}

ExtReal ext_scale(ExtReal a, double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("scale factor must be a finite real");
    if (r == 0.0) {
        if (a.is_infinite()) throw IndeterminateForm("0 * " + to_string(a) + " is undefined");
        return ExtReal(0.0);
    }
    return ExtReal(r * a.value());
}

ExtReal ext_abs(ExtReal a) noexcept {
    return a.is_infinite() ? ExtReal::pos_inf() : ExtReal(std::fabs(a.value()));
}

ExtReal ext_neg(ExtReal a) noexcept {
    if (a.is_pos_inf()) return ExtReal::neg_inf();
    if (a.is_neg_inf()) return ExtReal::pos_inf();
    return ExtReal(-a.value());
}

ExtReal ext_ratio(ExtReal num, ExtReal den) {
    if (num.is_infinite() && den.is_infinite()) throw IndeterminateForm("inf / inf is undefined");
    if (den == ExtReal(0.0)) {
        if (num == ExtReal(0.0)) throw IndeterminateForm("0 / 0 is undefined");
        return num < ExtReal(0.0) ? ExtReal::neg_inf() : ExtReal::pos_inf();
    }
    if (den.is_infinite()) return ExtReal(0.0);
    return ExtReal(num.value() / den.value());
}

std::string to_string(ExtReal a) {
    if (a.is_pos_inf()) return "inf";
    if (a.is_neg_inf()) return "-inf";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), a.value());
    return std::string(buf.data(), end);
}

namespace {

double parse_finite(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || std::isnan(v))
        throw BadParams("not an extended real: '" + std::string(whole) + "'");
    return v;
}

} // namespace

ExtReal parse_ext_real(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity")
        return ExtReal::pos_inf();
    if (text == "-inf" || text == "-infinity") return ExtReal::neg_inf();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const double p = parse_finite(text.substr(0, slash), text);
        const double q = parse_finite(text.substr(slash + 1), text);
        if (q == 0.0 || !std::isfinite(p) || !std::isfinite(q))
            throw BadParams("bad ratio: '" + std::string(text) + "'");
        return ExtReal(p / q);
    }
    const double v = parse_finite(text, text);
    if (std::isinf(v)) throw BadParams("use 'inf' or '-inf' for infinite values: '" + std::string(text) + "'");
    return ExtReal(v);
}

} // namespace jscfp
