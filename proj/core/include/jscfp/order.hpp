#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "jscfp/builtin_spaces.hpp"
#include "jscfp/metric_space.hpp"

namespace jscfp {

/// A metric space with a partial order on its points.
template <class P>
struct OrderedSpace {
    MetricSpace<P> base;
    std::function<bool(const P&, const P&)> leq;
    /// Optional samplers returning q with leq(p, q), resp. leq(q, p).
    std::function<P(Rng&, const P&)> sample_above;
    std::function<P(Rng&, const P&)> sample_below;
};

template <class P>
bool comparable(const OrderedSpace<P>& o, const P& a, const P& b) {
    return o.leq(a, b) || o.leq(b, a);
}

namespace detail {

inline constexpr int kRejectionTries = 64;

template <class P, class Pred>
P draw_by_rejection(const OrderedSpace<P>& o, Rng& rng, const P& fallback, Pred accept) {
    for (int i = 0; i < kRejectionTries; ++i) {
        P c = o.base.sample(rng);
        if (accept(c)) return c;
    }
    return fallback;
}

} // namespace detail

/// A point q with p <= q. Falls back to rejection sampling, then to p itself.
template <class P>
P draw_above(const OrderedSpace<P>& o, Rng& rng, const P& p) {
    if (o.sample_above) return o.sample_above(rng, p);
    return detail::draw_by_rejection(o, rng, p, [&](const P& c) { return o.leq(p, c); });
}

/// A point q with q <= p.
template <class P>
P draw_below(const OrderedSpace<P>& o, Rng& rng, const P& p) {
    if (o.sample_below) return o.sample_below(rng, p);
    return detail::draw_by_rejection(o, rng, p, [&](const P& c) { return o.leq(c, p); });
}

/// Reflexivity, antisymmetry (up to equals) and transitivity on sampled points.
template <class P>
CheckReport check_partial_order(const OrderedSpace<P>& o, std::size_t sample_count, std::uint64_t seed,
                                const CheckOptions& opts = {}) {
    CheckReport report;
    report.axiom = "partial_order";
    Rng rng(seed);
    const auto& s = o.base;
    for (std::size_t i = 0; i < sample_count; ++i) {
        const P a = s.sample(rng);
        const P b = draw_above(o, rng, a);
        const P c = draw_above(o, rng, b);
        ++report.samples;
        if (!o.leq(a, a))
            report.add_witness({{s.render(a)}, 0.0, 0.0, "not reflexive"}, opts.max_witnesses);
        if (o.leq(a, b) && o.leq(b, a) && !s.equals(a, b))
            report.add_witness({{s.render(a), s.render(b)}, 0.0, 0.0, "not antisymmetric"}, opts.max_witnesses);
        if (o.leq(a, b) && o.leq(b, c) && !o.leq(a, c))
            report.add_witness({{s.render(a), s.render(b), s.render(c)}, 0.0, 0.0, "not transitive"},
                               opts.max_witnesses);
    }
    return report;
}

using OrderedPointSpace = OrderedSpace<Point>;

/// The usual order of the extended line. Samplers shift by nonnegative
/// heavy-tailed offsets of the given scale, with a 10% chance of no shift.
OrderedPointSpace usual_order(Space space, double offset_scale = 10.0);
/// Only equal points are comparable.
OrderedPointSpace discrete_order(Space space);
/// Labels ordered by index.
OrderedPointSpace label_chain_order(Space space);
/// Labels ordered by an explicit matrix: leq(i, j) = table[i][j].
OrderedPointSpace table_order(Space space, std::vector<std::vector<bool>> table);

enum class OrderKind { usual, discrete, chain };
OrderKind parse_order_kind(std::string_view name);
std::string_view to_string(OrderKind kind) noexcept;

OrderedPointSpace make_order(Space space, OrderKind kind);

} // namespace jscfp
