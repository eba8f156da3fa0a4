#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "jscfp/builtin_spaces.hpp"
#include "jscfp/metric_space.hpp"

using namespace jscfp;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

Point r(double v) { return Point{ExtReal(v)}; }
Point l(std::size_t i) { return Point{Label{i}}; }

const SpaceKind kAllKinds[] = {SpaceKind::standard_real, SpaceKind::dislocated_abs, SpaceKind::b_metric_squared,
                               SpaceKind::finite_discrete};

Space make(SpaceKind k) { return builtin_space(k, SpaceParams{.labels = 7}); }

// Standard metric except that distances from 0 are doubled: D3 with c = 1 fails
// along sequences converging to 0.
Space kinked_space() {
    Space s = builtin_space(SpaceKind::standard_real);
    s.name = "kinked";
    s.metric = [](const Point& a, const Point& b) {
        const double x = real_of(a).value(), y = real_of(b).value();
        const double d = std::fabs(x - y);
        return ExtReal((x == 0.0) != (y == 0.0) ? 2.0 * d : d);
    };
    return s;
}

Space asymmetric_space() {
    Space s = builtin_space(SpaceKind::standard_real);
    s.name = "asymmetric";
    s.metric = [](const Point& a, const Point& b) {
        const double d = real_of(a).value() - real_of(b).value();
        return ExtReal(d > 0 ? d : -2.0 * d);
    };
    return s;
}

} // namespace

TEST(Spaces, StandardRealDistances) {
    const Space s = make(SpaceKind::standard_real);
    EXPECT_EQ(distance(s, r(-3), r(2)), ExtReal(5));
    EXPECT_EQ(distance(s, r(1.5), r(1.5)), ExtReal(0));
    EXPECT_THROW(distance(s, r(inf), r(0)), DomainViolation);
    EXPECT_THROW(distance(s, l(1), r(0)), DomainViolation);
}

TEST(Spaces, DislocatedDistances) {
    const Space s = make(SpaceKind::dislocated_abs);
    EXPECT_EQ(distance(s, r(-3), r(2)), ExtReal(5));
    EXPECT_EQ(distance(s, r(1.5), r(1.5)), ExtReal(3)); // nonzero self-distance
    EXPECT_EQ(distance(s, r(0), r(0)), ExtReal(0));
    EXPECT_EQ(distance(s, r(inf), r(0)), ExtReal::pos_inf());
    EXPECT_EQ(distance(s, r(-inf), r(-inf)), ExtReal::pos_inf());
}

TEST(Spaces, BMetricDistances) {
    const Space s = make(SpaceKind::b_metric_squared);
    EXPECT_EQ(distance(s, r(-3), r(2)), ExtReal(25));
    EXPECT_EQ(s.d3_constant, 2.0);
    // The relaxed triangle inequality with s = 2: (a-c)^2 <= 2((a-b)^2 + (b-c)^2).
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Point a = s.sample(rng), b = s.sample(rng), c = s.sample(rng);
        EXPECT_LE(distance(s, a, c).value(),
                  2.0 * (distance(s, a, b).value() + distance(s, b, c).value()) * (1 + 1e-12));
    }
}

TEST(Spaces, FiniteDiscreteDistances) {
    const Space s = make(SpaceKind::finite_discrete);
    EXPECT_EQ(distance(s, l(2), l(2)), ExtReal(0));
    EXPECT_EQ(distance(s, l(2), l(6)), ExtReal(1));
    EXPECT_THROW(distance(s, l(7), l(0)), DomainViolation);
    EXPECT_THROW(builtin_space(SpaceKind::finite_discrete, {}), BadParams);
}

TEST(Spaces, ParseRoundTrip) {
    for (SpaceKind k : kAllKinds) EXPECT_EQ(parse_space_kind(to_string(k)), k);
    EXPECT_THROW(parse_space_kind("hilbert"), BadParams);
    EXPECT_THROW(builtin_space(SpaceKind::standard_real, SpaceParams{.sample_scale = 0.0}), BadParams);
}

TEST(Spaces, SamplersStayInDomain) {
    for (SpaceKind k : kAllKinds) {
        const Space s = make(k);
        Rng rng(11);
        for (int i = 0; i < 2000; ++i) EXPECT_TRUE(s.contains(s.sample(rng))) << s.name;
    }
}

TEST(Spaces, DislocatedSamplerHitsInfinities) {
    const Space s = make(SpaceKind::dislocated_abs);
    Rng rng(5);
    int pos = 0, neg = 0;
    for (int i = 0; i < 4000; ++i) {
        const ExtReal v = real_of(s.sample(rng));
        pos += v.is_pos_inf();
        neg += v.is_neg_inf();
    }
    EXPECT_GT(pos, 100);
    EXPECT_GT(neg, 100);
}

TEST(Axioms, D1D2PassOnBuiltins) {
    for (SpaceKind k : kAllKinds) {
        const Space s = make(k);
        const auto d1 = check_d1(s, 10000, 1);
        const auto d2 = check_d2(s, 10000, 2);
        EXPECT_TRUE(d1.pass) << s.name;
        EXPECT_TRUE(d2.pass) << s.name;
        EXPECT_EQ(d1.samples, 10000u);
    }
}

TEST(Axioms, D3PassesWithDeclaredConstant) {
    for (SpaceKind k : kAllKinds) {
        const Space s = make(k);
        const auto trials = sample_d3_trials(s, 40, 64, 9);
        const auto rep = check_d3(s, trials, 64);
        EXPECT_TRUE(rep.pass) << s.name;
        EXPECT_EQ(rep.samples, 40u);
        EXPECT_FALSE(rep.vacuous);
    }
}

TEST(Axioms, D3EmptyIsVacuous) {
    const Space s = make(SpaceKind::standard_real);
    const auto rep = check_d3(s, std::vector<D3Trial<Point>>{}, 64);
    EXPECT_TRUE(rep.pass);
    EXPECT_TRUE(rep.vacuous);
}

TEST(Axioms, D3RejectsNonConvergentTrial) {
    const Space s = make(SpaceKind::standard_real);
    std::vector<D3Trial<Point>> trials(1);
    for (int i = 0; i < 64; ++i) trials[0].prefix.push_back(r(i % 2));
    trials[0].limit = r(0);
    trials[0].probe = r(3);
    try {
        check_d3(s, trials, 64);
        FAIL() << "expected NotConvergent";
    } catch (const NotConvergent& e) {
        EXPECT_EQ(e.trial(), 0u);
    }
}

TEST(Axioms, D3FailsOnKinkedMetric) {
    const Space s = kinked_space();
    std::vector<D3Trial<Point>> trials(1);
    for (int n = 1; n <= 64; ++n) trials[0].prefix.push_back(r(std::pow(0.5, n)));
    trials[0].limit = r(0);
    trials[0].probe = r(1);
    const auto rep = check_d3(s, trials, 64);
    EXPECT_FALSE(rep.pass);
    ASSERT_EQ(rep.witnesses.size(), 1u);
    EXPECT_EQ(rep.witnesses[0].lhs, ExtReal(2.0));
}

TEST(Axioms, D2FailsOnAsymmetricDistance) {
    const auto rep = check_d2(asymmetric_space(), 1000, 4);
    EXPECT_FALSE(rep.pass);
    ASSERT_FALSE(rep.witnesses.empty());
    EXPECT_NE(rep.witnesses[0].lhs, rep.witnesses[0].rhs);
    EXPECT_LE(rep.witnesses.size(), 16u);
}

TEST(Axioms, D1FailsWhenDistinctPointsHaveZeroDistance) {
    Space s = make(SpaceKind::finite_discrete);
    s.metric = [](const Point& a, const Point& b) { return ExtReal(label_of(a) / 2 == label_of(b) / 2 ? 0.0 : 1.0); };
    const auto rep = check_d1(s, 2000, 8);
    EXPECT_FALSE(rep.pass);
}

TEST(Convergence, Detection) {
    const Space s = make(SpaceKind::standard_real);
    std::vector<Point> geometric, oscillating;
    for (int n = 1; n <= 64; ++n) {
        geometric.push_back(r(3 + std::pow(0.3, n)));
        oscillating.push_back(r(n % 2 == 0 ? 3.0 : 4.0));
    }
    EXPECT_TRUE(is_convergent(s, geometric, r(3), 1e-6));
    EXPECT_FALSE(is_convergent(s, geometric, r(3.5), 1e-6));
    EXPECT_FALSE(is_convergent(s, oscillating, r(3), 1e-6));
    EXPECT_THROW(is_convergent(s, std::vector<Point>{}, r(3), 1e-6), BadParams);
}

TEST(Convergence, DislocatedLimitIsZero) {
    const Space s = make(SpaceKind::dislocated_abs);
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const auto seq = s.sample_convergent(rng, 64);
        EXPECT_EQ(seq.limit, r(0));
        EXPECT_TRUE(is_convergent(s, seq.prefix, seq.limit, 1e-6));
    }
}

TEST(Within, ToleranceScaling) {
    EXPECT_TRUE(within(1.0 + 5e-10, 1.0, 1e-9));
    EXPECT_FALSE(within(1.0 + 5e-9, 1.0, 1e-9));
    EXPECT_TRUE(within(1e6 + 1e-4, 1e6, 1e-9));
    EXPECT_TRUE(within(ExtReal::pos_inf(), ExtReal::pos_inf(), 1e-9));
    EXPECT_FALSE(within(ExtReal::pos_inf(), 1e300, 1e-9));
}
