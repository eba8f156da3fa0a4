#include "jscfp/product.hpp"

#include <algorithm>
#include <string>

namespace jscfp {

ExtReal d_plus(const Space& base, const PairPoint& a, const PairPoint& b) {
    return ext_add(distance(base, a.first, b.first), distance(base, a.second, b.second));
}

ExtReal d_max(const Space& base, const PairPoint& a, const PairPoint& b) {
    return ext_max(distance(base, a.first, b.first), distance(base, a.second, b.second));
}

bool pair_leq(const OrderedPointSpace& ordered, const PairPoint& a, const PairPoint& b) {
    return ordered.leq(a.first, b.first) && ordered.leq(b.second, a.second);
}

ProductMode parse_product_mode(std::string_view name) {
    if (name == "plus") return ProductMode::plus;
    if (name == "max") return ProductMode::max;
    throw BadParams("unknown product mode '" + std::string(name) + "'");
}

std::string_view to_string(ProductMode mode) noexcept {
    return mode == ProductMode::plus ? "plus" : "max";
}

PairSpace lift_space(const Space& base, ProductMode mode) {
    base.validate();
    PairSpace s;
    s.name = base.name + (mode == ProductMode::plus ? "^2[D+]" : "^2[Dm]");
    s.contains = [b = base.contains](const PairPoint& p) { return b(p.first) && b(p.second); };
    if (mode == ProductMode::plus)
        s.metric = [base](const PairPoint& a, const PairPoint& b) { return d_plus(base, a, b); };
    else
        s.metric = [base](const PairPoint& a, const PairPoint& b) { return d_max(base, a, b); };
    s.d3_constant = std::max(base.d3_constant, base.d3_constant);
    s.equals = [eq = base.equals](const PairPoint& a, const PairPoint& b) {
        return eq(a.first, b.first) && eq(a.second, b.second);
    };
    s.sample = [draw = base.sample](Rng& rng) {
        Point x = draw(rng);
        Point y = draw(rng);
        return PairPoint{std::move(x), std::move(y)};
    };
    s.render = [](const PairPoint& p) { return to_string(p); };
    if (base.sample_convergent) {
        s.sample_convergent = [draw = base.sample_convergent](Rng& rng, std::size_t len) {
            auto xs = draw(rng, len);
            auto ys = draw(rng, len);
            ConvergentSequence<PairPoint> seq{{}, PairPoint{xs.limit, ys.limit}};
            seq.prefix.reserve(len);
            for (std::size_t i = 0; i < len; ++i) seq.prefix.push_back({xs.prefix[i], ys.prefix[i]});
            return seq;
        };
    }
    return s;
}

OrderedPairSpace lift_order(const OrderedPointSpace& ordered, ProductMode mode) {
    OrderedPairSpace o{lift_space(ordered.base, mode), {}, {}, {}};
    o.leq = [ordered](const PairPoint& a, const PairPoint& b) { return pair_leq(ordered, a, b); };
    o.sample_above = [ordered](Rng& rng, const PairPoint& p) {
        Point x = draw_above(ordered, rng, p.first);
        Point y = draw_below(ordered, rng, p.second);
        return PairPoint{std::move(x), std::move(y)};
    };
    o.sample_below = [ordered](Rng& rng, const PairPoint& p) {
        Point x = draw_below(ordered, rng, p.first);
        Point y = draw_above(ordered, rng, p.second);
        return PairPoint{std::move(x), std::move(y)};
    };
    return o;
}

} // namespace jscfp
