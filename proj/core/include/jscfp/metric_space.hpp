#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jscfp/errors.hpp"
#include "jscfp/ext_real.hpp"

namespace jscfp {

using Rng = std::mt19937_64;

/// A finite prefix of a sequence together with the point it converges to.
template <class P>
struct ConvergentSequence {
    std::vector<P> prefix;
    P limit;
};

/**
 * A JS-metric space description over points of type P.
 *
 * `metric` maps into [0, +inf]; self-distance may be nonzero. The axiom D3
 * constant is carried as `d3_constant`. All callables must be pure; the
 * samplers are deterministic given the generator state.
 */
template <class P>
struct MetricSpace {
    std::string name;
    std::function<bool(const P&)> contains;
    std::function<ExtReal(const P&, const P&)> metric;
    double d3_constant = 1.0;
    std::function<bool(const P&, const P&)> equals;
    std::function<P(Rng&)> sample;
    std::function<std::string(const P&)> render;
    /// Optional. Draws a sequence of the given length that D-converges, with its limit.
    std::function<ConvergentSequence<P>(Rng&, std::size_t)> sample_convergent;

    void validate() const {
        if (!contains || !metric || !equals || !sample || !render)
            throw BadParams("space '" + name + "' is missing a required callable");
        if (!(d3_constant > 0.0) || !ExtReal(d3_constant).is_finite())
            throw BadParams("space '" + name + "' needs a positive finite D3 constant");
    }
};

/// D(x, y) with domain checks on both arguments.
template <class P>
ExtReal distance(const MetricSpace<P>& space, const P& x, const P& y) {
    if (!space.contains(x)) throw DomainViolation(space.render(x) + " is outside " + space.name);
    if (!space.contains(y)) throw DomainViolation(space.render(y) + " is outside " + space.name);
    return space.metric(x, y);
}

struct Witness {
    std::vector<std::string> points;
    ExtReal lhs;
    ExtReal rhs;
    std::string detail;
};

/// Outcome of a sampled check. A failing report carries witnesses.
struct CheckReport {
    std::string axiom;
    bool pass = true;
    bool vacuous = false;
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::vector<Witness> witnesses;

    void add_witness(Witness w, std::size_t cap) {
        pass = false;
        if (witnesses.size() < cap) witnesses.push_back(std::move(w));
    }
};

struct CheckOptions {
    double tolerance = 1e-9;
    double convergence_tol = 1e-6;
    std::size_t max_witnesses = 16;
};

/// `lhs <= rhs` up to `tol` scaled by max(1, |rhs|); comparisons against +inf are exact.
inline bool within(ExtReal lhs, ExtReal rhs, double tol) {
    if (rhs.is_pos_inf()) return true;
    if (lhs.is_pos_inf()) return false;
    const double scale = std::max(1.0, std::abs(rhs.value()));
    return lhs.value() <= rhs.value() + tol * scale;
}

/// D1: D(x,y) = 0 implies x = y.
template <class P>
CheckReport check_d1(const MetricSpace<P>& space, std::size_t sample_count, std::uint64_t seed,
                     const CheckOptions& opts = {}) {
    if (sample_count == 0) throw BadParams("check_d1 needs at least one sample");
    CheckReport report;
    report.axiom = "D1";
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
        const P x = space.sample(rng);
        const P y = space.sample(rng);
        const ExtReal d = distance(space, x, y);
        ++report.samples;
        if (d == ExtReal(0.0) && !space.equals(x, y))
            report.add_witness({{space.render(x), space.render(y)}, d, 0.0, "zero distance between distinct points"},
                               opts.max_witnesses);
    }
    return report;
}

/// D2: D(x,y) = D(y,x), compared exactly.
template <class P>
CheckReport check_d2(const MetricSpace<P>& space, std::size_t sample_count, std::uint64_t seed,
                     const CheckOptions& opts = {}) {
    if (sample_count == 0) throw BadParams("check_d2 needs at least one sample");
    CheckReport report;
    report.axiom = "D2";
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
        const P x = space.sample(rng);
        const P y = space.sample(rng);
        const ExtReal dxy = distance(space, x, y);
        const ExtReal dyx = distance(space, y, x);
        ++report.samples;
        if (!(dxy == dyx))
            report.add_witness({{space.render(x), space.render(y)}, dxy, dyx, "D(x,y) != D(y,x)"},
                               opts.max_witnesses);
    }
    return report;
}

/**
 * True iff D(x_n, candidate) < tol over the final quarter of the prefix and the
 * maximum over the second half does not exceed the maximum over the first half.
 */
template <class P>
bool is_convergent(const MetricSpace<P>& space, std::span<const P> prefix, const P& candidate, double tol) {
    if (prefix.empty()) throw BadParams("is_convergent needs a nonempty prefix");
    if (!(tol > 0.0)) throw BadParams("is_convergent needs tol > 0");
    const std::size_t n = prefix.size();
    std::vector<ExtReal> d;
    d.reserve(n);
    for (const P& x : prefix) d.push_back(distance(space, x, candidate));

    const std::size_t quarter = std::max<std::size_t>(1, n / 4);
    for (std::size_t i = n - quarter; i < n; ++i)
        if (!(d[i] < ExtReal(tol))) return false;

    if (n >= 2) {
        ExtReal first{0.0}, second{0.0};
        for (std::size_t i = 0; i < n / 2; ++i) first = ext_max(first, d[i]);
        for (std::size_t i = n / 2; i < n; ++i) second = ext_max(second, d[i]);
        if (first < second) return false;
    }
    return true;
}

template <class P>
bool is_convergent(const MetricSpace<P>& space, const std::vector<P>& prefix, const P& candidate, double tol) {
    return is_convergent(space, std::span<const P>(prefix), candidate, tol);
}

template <class P>
struct D3Trial {
    std::vector<P> prefix;
    P limit;
    P probe;
};

/**
 * D3: D(limit, y) <= c * limsup D(x_n, y), with the limsup taken as the
 * maximum over the final half of the (horizon-truncated) prefix.
 *
 * An empty trial list is a vacuous pass. Throws NotConvergent when a prefix
 * fails is_convergent at opts.convergence_tol.
 */
template <class P>
CheckReport check_d3(const MetricSpace<P>& space, std::span<const D3Trial<P>> trials, std::size_t horizon,
                     const CheckOptions& opts = {}) {
    if (horizon == 0) throw BadParams("check_d3 needs a positive horizon");
    CheckReport report;
    report.axiom = "D3";
    if (trials.empty()) {
        report.vacuous = true;
        return report;
    }
    for (std::size_t t = 0; t < trials.size(); ++t) {
        const auto& trial = trials[t];
        const std::size_t len = std::min(horizon, trial.prefix.size());
        const std::span<const P> prefix(trial.prefix.data(), len);
        if (len == 0 || !is_convergent(space, prefix, trial.limit, opts.convergence_tol))
            throw NotConvergent("trial " + std::to_string(t) + " does not converge to " +
                                    space.render(trial.limit),
                                t);
        ExtReal tail{0.0};
        for (std::size_t i = len / 2; i < len; ++i) tail = ext_max(tail, distance(space, prefix[i], trial.probe));
        const ExtReal lhs = distance(space, trial.limit, trial.probe);
        const ExtReal rhs = ext_scale(tail, space.d3_constant);
        ++report.samples;
        if (!within(lhs, rhs, opts.tolerance))
            report.add_witness({{space.render(trial.limit), space.render(trial.probe)},
                                lhs,
                                rhs,
                                "trial " + std::to_string(t) + ": D(limit,y) > c * limsup D(x_n,y)"},
                               opts.max_witnesses);
    }
    return report;
}

template <class P>
CheckReport check_d3(const MetricSpace<P>& space, const std::vector<D3Trial<P>>& trials, std::size_t horizon,
                     const CheckOptions& opts = {}) {
    return check_d3(space, std::span<const D3Trial<P>>(trials), horizon, opts);
}

/// Draws `count` convergent trials with probes from the space's own samplers.
template <class P>
std::vector<D3Trial<P>> sample_d3_trials(const MetricSpace<P>& space, std::size_t count, std::size_t length,
                                         std::uint64_t seed) {
    if (!space.sample_convergent) throw BadParams("space '" + space.name + "' has no convergent-sequence sampler");
    Rng rng(seed);
    std::vector<D3Trial<P>> trials;
    trials.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto seq = space.sample_convergent(rng, length);
        P probe = space.sample(rng);
        trials.push_back({std::move(seq.prefix), std::move(seq.limit), std::move(probe)});
    }
    return trials;
}

} // namespace jscfp
