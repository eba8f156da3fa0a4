#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "jscfp/solver.hpp"

using namespace jscfp;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

Point r(double v) { return Point{ExtReal(v)}; }
PairPoint rr(double a, double b) { return {r(a), r(b)}; }
double val(const Point& p) { return real_of(p).value(); }

CoupledOperator example_f() { return linear_mix(1.0 / 3.0, -1.0 / 3.0); }

OrderedPointSpace dislocated() { return usual_order(builtin_space(SpaceKind::dislocated_abs)); }
OrderedPointSpace standard() { return usual_order(builtin_space(SpaceKind::standard_real)); }

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

SolveConfig example_cfg() {
    SolveConfig cfg;
    cfg.declared_k = 2.0 / 3.0;
    cfg.hypothesis_samples = 2000;
    cfg.seed = 7;
    return cfg;
}

} // namespace

TEST(SolveConfig, Validation) {
    SolveConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.max_iters = 0;
    EXPECT_THROW(cfg.validate(), BadParams);
    cfg = {};
    cfg.residual_tol = 0;
    EXPECT_THROW(cfg.validate(), BadParams);
    cfg = {};
    cfg.declared_k = 1.0;
    EXPECT_THROW(cfg.validate(), BadParams);
    cfg = {};
    cfg.divergence_cap = ExtReal(-1);
    EXPECT_THROW(cfg.validate(), BadParams);
    try {
        SolveConfig bad;
        bad.max_iters = 0;
        bad.validate();
    } catch (const BadParams& e) {
        EXPECT_NE(std::string(e.what()).find("max_iters"), std::string::npos);
    }
}

TEST(SolveConfig, ModeNames) {
    for (SolveMode m : {SolveMode::bhaskar_plus, SolveMode::bhaskar_max, SolveMode::berinde})
        EXPECT_EQ(parse_solve_mode(to_string(m)), m);
    EXPECT_THROW(parse_solve_mode("picard"), BadParams);
    EXPECT_EQ(contraction_form_for(SolveMode::bhaskar_max), ContractionForm::max_form);
}

TEST(Hypotheses, WorkedExamplePasses) {
    const HypothesisReport h = check_hypotheses(dislocated(), example_f(), r(-3), r(2), example_cfg());
    EXPECT_TRUE(h.order.forward);
    EXPECT_TRUE(h.order.pass);
    EXPECT_TRUE(h.delta_pass);
    EXPECT_NEAR(h.deltas.m.value(), 10.0 / 3.0, 1e-12);
    EXPECT_TRUE(h.mixed_monotone.pass);
    EXPECT_TRUE(h.contraction.pass);
    EXPECT_TRUE(h.all_pass);
}

TEST(Hypotheses, ReversedStartFailsOrientationA) {
    EXPECT_NEAR(val(example_f()(r(3), r(-2))), 5.0 / 3.0, 1e-15);
    const HypothesisReport h = check_hypotheses(dislocated(), example_f(), r(3), r(-2), example_cfg());
    EXPECT_FALSE(h.order.forward);
    EXPECT_TRUE(h.order.backward);
    EXPECT_FALSE(h.order.pass);
    EXPECT_FALSE(h.all_pass);

    SolveConfig berinde = example_cfg();
    berinde.mode = SolveMode::berinde;
    EXPECT_TRUE(check_hypotheses(dislocated(), example_f(), r(3), r(-2), berinde).order.pass);
}

TEST(Hypotheses, ExpansionFailsContraction) {
    SolveConfig cfg;
    cfg.declared_k = 0.9;
    cfg.hypothesis_samples = 2000;
    const HypothesisReport h = check_hypotheses(standard(), linear_mix(2.0, -1.0), r(1), r(-1), cfg);
    EXPECT_FALSE(h.contraction.pass);
    EXPECT_FALSE(h.contraction.witnesses.empty());
    EXPECT_GT(h.contraction.k_hat.value(), 1.0);
    EXPECT_FALSE(h.all_pass);
}

TEST(Solve, WorkedExample) {
    const SolveReport rep = solve(dislocated(), example_f(), r(-3), r(2), example_cfg());
    ASSERT_EQ(rep.status, SolveStatus::converged);
    ASSERT_TRUE(rep.candidate);
    EXPECT_LE(rep.iterations, 60u);
    EXPECT_LE(rep.residual.value(), 1e-9);
    EXPECT_LE(std::fabs(val(rep.candidate->first)), 1e-9);
    EXPECT_LE(std::fabs(val(rep.candidate->second)), 1e-9);
    EXPECT_NEAR(val(rep.trace.xs[1]), -5.0 / 3.0, 1e-12);
    EXPECT_NEAR(val(rep.trace.ys[2]), 10.0 / 9.0, 1e-12);
    EXPECT_NEAR(rep.measured_rate.value(), 2.0 / 3.0, 1e-6);
    ASSERT_TRUE(rep.hypotheses);
    EXPECT_TRUE(rep.hypotheses->all_pass);
    EXPECT_TRUE(replays(example_f(), rep.trace));
    // The stored residual re-evaluates exactly.
    EXPECT_EQ(residual_at(builtin_space(SpaceKind::dislocated_abs), example_f(), *rep.candidate), rep.residual);
    EXPECT_EQ(rep.steps.size(), rep.trace.size());
    EXPECT_EQ(rep.residuals.size(), rep.trace.size());
}

TEST(Solve, ConstantConvergesFast) {
    SolveConfig cfg;
    cfg.verify_hypotheses = false;
    Rng rng(3);
    const Space s = builtin_space(SpaceKind::standard_real);
    for (int i = 0; i < 50; ++i) {
        const SolveReport rep = solve(standard(), constant_operator(r(2.5)), s.sample(rng), s.sample(rng), cfg);
        ASSERT_EQ(rep.status, SolveStatus::converged);
        EXPECT_LE(rep.iterations, 2u);
        EXPECT_EQ(*rep.candidate, rr(2.5, 2.5));
    }
}

TEST(Solve, ExpansionDiverges) {
    SolveConfig cfg;
    cfg.hypothesis_samples = 500;
    const SolveReport rep = solve(standard(), linear_mix(2.0, 0.0), r(1), r(1), cfg);
    EXPECT_EQ(rep.status, SolveStatus::diverged);
    EXPECT_FALSE(rep.candidate);
}

TEST(Solve, HypothesisFailedOnlyWithoutConvergence) {
    SolveConfig cfg;
    cfg.hypothesis_samples = 500;
    cfg.max_iters = 20;
    // F(x,y) = -x oscillates without growing.
    const SolveReport osc = solve(standard(), linear_mix(-1.0, 0.0), r(1), r(2), cfg);
    EXPECT_EQ(osc.status, SolveStatus::hypothesis_failed);
    EXPECT_EQ(osc.iterations, 20u);
    // Reversed start on the example map: hypotheses fail, iteration still converges.
    cfg.max_iters = 10000;
    cfg.declared_k = 2.0 / 3.0;
    const SolveReport rev = solve(dislocated(), example_f(), r(3), r(-2), cfg);
    EXPECT_FALSE(rev.hypotheses->all_pass);
    EXPECT_EQ(rev.status, SolveStatus::converged);
}

TEST(Solve, MaxItersWhenHypothesesHold) {
    SolveConfig cfg = example_cfg();
    cfg.max_iters = 5;
    const SolveReport rep = solve(dislocated(), example_f(), r(-3), r(2), cfg);
    EXPECT_EQ(rep.status, SolveStatus::max_iters);
    EXPECT_EQ(rep.trace.size(), 6u);
}

TEST(Solve, EvaluationErrorIsReported) {
    SolveConfig cfg;
    cfg.verify_hypotheses = false;
    const SolveReport rep = solve(dislocated(), example_f(), r(inf), r(inf), cfg);
    EXPECT_EQ(rep.status, SolveStatus::evaluation_error);
    EXPECT_FALSE(rep.error.empty());
    ASSERT_EQ(rep.trace.size(), 1u);
    EXPECT_EQ(rep.trace.at(0), rr(inf, inf));
    EXPECT_EQ(rep.residuals.size(), 1u);
    EXPECT_TRUE(rep.residual.is_pos_inf());
}

TEST(Solve, ConvergedImpliesResidualWithinTolerance) {
    Rng rng(11);
    const Space s = builtin_space(SpaceKind::standard_real);
    for (int i = 0; i < 100; ++i) {
        SolveConfig cfg;
        cfg.verify_hypotheses = false;
        cfg.residual_tol = std::pow(10.0, -3.0 - (i % 10));
        const double a = uniform(rng, -0.45, 0.45), b = uniform(rng, -0.45, 0.45);
        const SolveReport rep = solve(standard(), linear_mix(a, b), s.sample(rng), s.sample(rng), cfg);
        if (rep.status == SolveStatus::converged) {
            EXPECT_LE(rep.residual.value(), cfg.residual_tol);
            EXPECT_EQ(residual_at(s, linear_mix(a, b), *rep.candidate), rep.residual);
        }
    }
}

TEST(ModeEquivalence, BerindeMatchesBhaskarPlus) {
    const Space s = builtin_space(SpaceKind::standard_real);
    const Space labels = builtin_space(SpaceKind::finite_discrete, SpaceParams{.labels = 6});
    const OrderedPointSpace lo = make_order(labels, OrderKind::chain);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        SolveConfig plus;
        plus.verify_hypotheses = false;
        plus.max_iters = 200;
        SolveConfig berinde = plus;
        berinde.mode = SolveMode::berinde;

        const CoupledOperator ops[] = {example_f(), linear_mix(uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5)),
                                       constant_operator(s.sample(rng))};
        const Point x0 = s.sample(rng), y0 = s.sample(rng);
        for (const auto& f : ops) {
            const SolveReport a = solve(standard(), f, x0, y0, plus);
            const SolveReport b = solve(standard(), f, x0, y0, berinde);
            EXPECT_EQ(a.trace.xs, b.trace.xs);
            EXPECT_EQ(a.trace.ys, b.trace.ys);
            EXPECT_EQ(a.status, b.status);
        }

        std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
        for (auto& row : table)
            for (auto& v : row) v = below(rng, 6);
        const CoupledOperator t = table_operator(table);
        const Point l0 = Label{below(rng, 6)}, l1 = Label{below(rng, 6)};
        const SolveReport a = solve(lo, t, l0, l1, plus);
        const SolveReport b = solve(lo, t, l0, l1, berinde);
        EXPECT_EQ(a.trace.xs, b.trace.xs);
        EXPECT_EQ(a.trace.ys, b.trace.ys);
    }
}

TEST(Limits, DislocatedSelfDistance) {
    const Space s = builtin_space(SpaceKind::dislocated_abs);
    Rng rng(5);
    std::size_t converged = 0;
    for (int i = 0; i < 200; ++i) {
        SolveConfig cfg;
        cfg.verify_hypotheses = false;
        cfg.residual_tol = i % 2 ? 1e-9 : 1e-6;
        const CoupledOperator f = i % 3 ? example_f() : linear_mix(uniform(rng, 0, 0.4), uniform(rng, -0.4, 0));
        const SolveReport rep = solve(dislocated(), f, s.sample(rng), s.sample(rng), cfg);
        if (rep.status != SolveStatus::converged) continue;
        ++converged;
        EXPECT_LE(distance(s, rep.candidate->first, rep.candidate->first).value(), 2 * cfg.residual_tol);
        EXPECT_LE(distance(s, rep.candidate->second, rep.candidate->second).value(), 2 * cfg.residual_tol);
    }
    EXPECT_GT(converged, 100u);
}

TEST(Limits, ShrinkingToleranceLimitIsUnique) {
    const Space s = builtin_space(SpaceKind::dislocated_abs);
    std::vector<PairPoint> candidates;
    std::vector<double> tols;
    for (double tol = 1e-3; tol >= 1e-13; tol /= 10) {
        SolveConfig cfg = example_cfg();
        cfg.residual_tol = tol;
        const SolveReport rep = solve(dislocated(), example_f(), r(-3), r(2), cfg);
        ASSERT_EQ(rep.status, SolveStatus::converged);
        candidates.push_back(*rep.candidate);
        tols.push_back(tol);
    }
    // Every pair of candidates is within the coarser tolerance of each other, so
    // the candidates form a Cauchy family with a single limit.
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            EXPECT_LE(d_plus(s, candidates[i], candidates[j]).value(), 2 * tols[i]);
    EXPECT_LE(d_plus(s, candidates.back(), rr(0, 0)).value(), 1e-13);
}

TEST(Limits, MonotoneTraceWithPassingHypotheses) {
    const OrderedPointSpace o = dislocated();
    for (double x0 : {-3.0, -10.0, -0.5}) {
        for (double y0 : {2.0, 7.0, 0.25}) {
            const SolveReport rep = solve(o, example_f(), r(x0), r(y0), example_cfg());
            if (!rep.hypotheses->all_pass) continue;
            for (std::size_t n = 0; n + 1 < rep.trace.size(); ++n) {
                EXPECT_TRUE(o.leq(rep.trace.xs[n], rep.trace.xs[n + 1]));
                EXPECT_TRUE(o.leq(rep.trace.ys[n + 1], rep.trace.ys[n]));
            }
        }
    }
}

TEST(VerifyRate, WorkedExampleAgainstBruteForce) {
    const Space s = builtin_space(SpaceKind::dislocated_abs);
    const SolveReport rep = solve(dislocated(), example_f(), r(-3), r(2), example_cfg());
    const DeltaBounds d = delta_bounds(s, example_f(), r(-3), r(2), 64);
    const RateReport rate = verify_rate(s, rep, 2.0 / 3.0, d.m);
    EXPECT_TRUE(rate.pass);
    EXPECT_FALSE(rate.violation);

    // Independent recomputation of every (n, p) pair.
    const auto& xs = rep.trace.xs;
    std::size_t checked = 0;
    for (std::size_t n = 1; n < xs.size(); ++n)
        for (std::size_t p = 1; n + p < xs.size(); ++p) {
            const double lhs = std::fabs(val(xs[n])) + std::fabs(val(xs[n + p]));
            const double bound = std::pow(2.0 / 3.0, double(n) - 1) * (10.0 / 3.0);
            EXPECT_LE(lhs, bound + 1e-9);
            ++checked;
        }
    EXPECT_EQ(rate.checked, 2 * checked);
}

TEST(VerifyRate, ConstantTraceWithZeroK) {
    SolveConfig cfg;
    cfg.verify_hypotheses = false;
    SolveReport rep = solve(standard(), constant_operator(r(1)), r(-4), r(9), cfg);
    while (rep.trace.size() < 3) rep.trace.push(rep.trace.at(rep.trace.size() - 1));
    EXPECT_TRUE(verify_rate(builtin_space(SpaceKind::standard_real), rep, 0.0, ExtReal(123)).pass);
}

TEST(VerifyRate, SlowOperatorFailsAtHalf) {
    SolveConfig cfg;
    cfg.verify_hypotheses = false;
    cfg.max_iters = 40;
    const Space s = builtin_space(SpaceKind::standard_real);
    const SolveReport rep = solve(standard(), linear_mix(0.9, 0.0), r(1), r(-1), cfg);
    const DeltaBounds d = delta_bounds(s, linear_mix(0.9, 0.0), r(1), r(-1), 64);
    const RateReport rate = verify_rate(s, rep, 0.5, d.m);
    EXPECT_FALSE(rate.pass);
    ASSERT_TRUE(rate.violation);
    const auto& v = *rate.violation;
    EXPECT_GT(v.lhs, v.bound);
    const auto& coord = v.coordinate == 'x' ? rep.trace.xs : rep.trace.ys;
    EXPECT_EQ(distance(s, coord[v.n], coord[v.n + v.p]), v.lhs);
}

TEST(VerifyRate, Preconditions) {
    SolveReport tiny;
    tiny.trace.push(rr(0, 0));
    const Space s = builtin_space(SpaceKind::standard_real);
    EXPECT_THROW(verify_rate(s, tiny, 0.5, ExtReal(1)), BadParams);
    const SolveReport rep = solve(dislocated(), example_f(), r(-3), r(2), example_cfg());
    EXPECT_THROW(verify_rate(s, rep, 0.5, ExtReal::pos_inf()), BadParams);
    EXPECT_THROW(verify_rate(s, rep, 1.0, ExtReal(1)), BadParams);
}

TEST(TraceCsv, HeaderAndRoundTrip) {
    const SolveReport rep = solve(dislocated(), example_f(), r(-3), r(2), example_cfg());
    std::ostringstream out;
    write_trace_csv(out, rep);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n,x_n,y_n,step_dplus,residual");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string n, x, y;
        std::getline(row, n, ',');
        std::getline(row, x, ',');
        std::getline(row, y, ',');
        EXPECT_EQ(std::stoul(n), rows);
        EXPECT_EQ(std::stod(x), val(rep.trace.xs[rows]));
        EXPECT_EQ(std::stod(y), val(rep.trace.ys[rows]));
        ++rows;
    }
    EXPECT_EQ(rows, rep.trace.size());
    EXPECT_EQ(out.str().substr(0, 40).find("\n0,-3,2,,"), std::string("n,x_n,y_n,step_dplus,residual").size());
}
