#include "jscfp/order.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace jscfp {

namespace {

ExtReal nonnegative_offset(Rng& rng, double scale) {
    std::bernoulli_distribution none(0.1);
    if (none(rng)) return 0.0;
    return std::fabs(sample_finite_real(rng, scale));
}

} // namespace

OrderedPointSpace usual_order(Space space, double offset_scale) {
    OrderedPointSpace o{std::move(space), {}, {}, {}};
    o.leq = [](const Point& a, const Point& b) { return real_of(a) <= real_of(b); };
    o.sample_above = [offset_scale](Rng& rng, const Point& p) {
        return Point{ext_add(real_of(p), nonnegative_offset(rng, offset_scale))};
    };
    o.sample_below = [offset_scale](Rng& rng, const Point& p) {
        return Point{ext_sub(real_of(p), nonnegative_offset(rng, offset_scale))};
    };
    return o;
}

OrderedPointSpace discrete_order(Space space) {
    OrderedPointSpace o{std::move(space), {}, {}, {}};
    o.leq = [eq = o.base.equals](const Point& a, const Point& b) { return eq(a, b); };
    o.sample_above = [](Rng&, const Point& p) { return p; };
    o.sample_below = [](Rng&, const Point& p) { return p; };
    return o;
}

OrderedPointSpace label_chain_order(Space space) {
    OrderedPointSpace o{std::move(space), {}, {}, {}};
    o.leq = [](const Point& a, const Point& b) { return label_of(a) <= label_of(b); };
    return o;
}

OrderedPointSpace table_order(Space space, std::vector<std::vector<bool>> table) {
    for (const auto& row : table)
        if (row.size() != table.size()) throw BadParams("order table must be square");
    OrderedPointSpace o{std::move(space), {}, {}, {}};
    o.leq = [t = std::move(table)](const Point& a, const Point& b) {
        const std::size_t i = label_of(a), j = label_of(b);
        if (i >= t.size() || j >= t.size()) throw DomainViolation("label outside the order table");
        return static_cast<bool>(t[i][j]);
    };
    return o;
}

OrderKind parse_order_kind(std::string_view name) {
    if (name == "usual") return OrderKind::usual;
    if (name == "discrete") return OrderKind::discrete;
    if (name == "chain") return OrderKind::chain;
    throw BadParams("unknown order kind '" + std::string(name) + "'");
}

std::string_view to_string(OrderKind kind) noexcept {
    switch (kind) {
    case OrderKind::usual: return "usual";
    case OrderKind::discrete: return "discrete";
    case OrderKind::chain: return "chain";
    }
    return "unknown";
}

OrderedPointSpace make_order(Space space, OrderKind kind) {
    switch (kind) {
    case OrderKind::usual: return usual_order(std::move(space));
    case OrderKind::discrete: return discrete_order(std::move(space));
    case OrderKind::chain: return label_chain_order(std::move(space));
    }
    throw BadParams("unknown order kind");
}

} // namespace jscfp
