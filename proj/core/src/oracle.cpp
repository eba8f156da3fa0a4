#include "jscfp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

namespace jscfp {

void FiniteInstance::validate() const {
    const std::size_t n = labels.size();
    if (n == 0) throw BadParams("instance needs at least one label");
    if (n > kMaxOracleLabels)
        throw BadParams("instance has " + std::to_string(n) + " labels; the cap is " +
                        std::to_string(kMaxOracleLabels));
    auto square = [n](const auto& m, const char* what) {
        if (m.size() != n) throw BadParams(std::string(what) + " must have one row per label");
        for (const auto& row : m)
            if (row.size() != n) throw BadParams(std::string(what) + " must be square");
    };
    square(distance, "distance");
    square(leq, "leq");
    square(f, "f");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ExtReal d = distance[i][j];
            if (d < ExtReal(0.0)) throw BadParams("distance[" + std::to_string(i) + "][" + std::to_string(j) + "] < 0");
            if (!(d == distance[j][i]))
                throw BadParams("distance is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            if (i != j && d == ExtReal(0.0))
                throw BadParams("distance between distinct labels " + std::to_string(i) + " and " + std::to_string(j) +
                                " is zero");
            if (f[i][j] >= n) throw BadParams("f[" + std::to_string(i) + "][" + std::to_string(j) + "] is not a label");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i][i]) throw BadParams("leq is not reflexive at " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i])
                throw BadParams("leq is not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            for (std::size_t k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k])
                    throw BadParams("leq is not transitive at (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ", " + std::to_string(k) + ")");
        }
    }
}

Space FiniteInstance::to_space() const {
    validate();
    auto self = std::make_shared<const FiniteInstance>(*this);
    const std::size_t n = size();
    Space s;
    s.name = "finite(" + std::to_string(n) + ")";
    s.contains = [n](const Point& p) { return !is_real(p) && std::get<Label>(p).index < n; };
    s.metric = [self](const Point& a, const Point& b) { return self->distance[label_of(a)][label_of(b)]; };
    s.d3_constant = 1.0;
    s.equals = [](const Point& a, const Point& b) { return a == b; };
    s.sample = [n](Rng& rng) {
        return Point{Label{std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)}};
    };
    s.render = [self](const Point& p) {
        if (is_real(p)) return to_string(p);
        const std::size_t i = std::get<Label>(p).index;
        return i < self->size() ? self->labels[i] : to_string(p);
    };
    return s;
}

OrderedPointSpace FiniteInstance::to_ordered_space() const {
    OrderedPointSpace o{to_space(), {}, {}, {}};
    auto table = std::make_shared<const std::vector<std::vector<bool>>>(leq);
    o.leq = [table](const Point& a, const Point& b) { return (*table)[label_of(a)][label_of(b)]; };
    auto pick = [table](Rng& rng, std::size_t p, bool above) {
        std::vector<std::size_t> options;
        for (std::size_t j = 0; j < table->size(); ++j)
            if (above ? (*table)[p][j] : (*table)[j][p]) options.push_back(j);
        return Point{Label{options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]}};
    };
    o.sample_above = [pick](Rng& rng, const Point& p) { return pick(rng, label_of(p), true); };
    o.sample_below = [pick](Rng& rng, const Point& p) { return pick(rng, label_of(p), false); };
    return o;
}

CoupledOperator FiniteInstance::to_operator() const { return table_operator(f); }

std::vector<std::pair<std::size_t, std::size_t>> enumerate_coupled_fixed_points(const FiniteInstance& inst) {
    inst.validate();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < inst.size(); ++x)
        for (std::size_t y = 0; y < inst.size(); ++y)
            if (inst.f[x][y] == x && inst.f[y][x] == y) out.emplace_back(x, y);
    return out;
}

ExtReal exact_contraction_constant(const FiniteInstance& inst, ContractionForm form) {
    inst.validate();
    const std::size_t n = inst.size();
    const auto& d = inst.distance;
    const auto& f = inst.f;
    const ExtReal zero{0.0};
    ExtReal best{0.0};
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t u = 0; u < n; ++u) {
            if (!inst.leq[u][x]) continue;
            for (std::size_t y = 0; y < n; ++y) {
                for (std::size_t v = 0; v < n; ++v) {
                    if (!inst.leq[y][v]) continue;
                    const ExtReal head = d[f[x][y]][f[u][v]];
                    ExtReal num, den;
                    switch (form) {
                    case ContractionForm::bhaskar_plus:
                        num = ext_scale(head, 2.0);
                        den = ext_add(d[x][u], d[y][v]);
                        break;
                    case ContractionForm::max_form:
                        num = head;
                        den = ext_max(d[x][u], d[y][v]);
                        break;
                    case ContractionForm::berinde:
                        num = ext_add(head, d[f[y][x]][f[v][u]]);
                        den = ext_add(d[x][u], d[y][v]);
                        break;
                    }
                    if (num == zero && den == zero) continue;
                    if (num.is_infinite() && den.is_infinite()) continue;
                    if (den == zero || num.is_infinite()) return ExtReal::pos_inf();
                    best = ext_max(best, ext_ratio(num, den));
                }
            }
        }
    }
    return best;
}

bool exact_mixed_monotone(const FiniteInstance& inst) {
    inst.validate();
    const std::size_t n = inst.size();
    const auto& le = inst.leq;
    const auto& f = inst.f;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!le[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (!le[f[a][c]][f[b][c]]) return false; // nondecreasing in the first slot
                if (!le[f[c][b]][f[c][a]]) return false; // nonincreasing in the second slot
            }
        }
    return true;
}

namespace {

std::string pair_text(const FiniteInstance& inst, std::size_t x, std::size_t y) {
    return "(" + inst.labels[x] + ", " + inst.labels[y] + ")";
}

} // namespace

OracleReport cross_check(const FiniteInstance& inst, const SolveConfig& cfg) {
    inst.validate();
    cfg.validate();
    const std::size_t n = inst.size();
    OracleReport rep;
    rep.labels = n;
    rep.form = contraction_form_for(cfg.mode);
    rep.exact_k = exact_contraction_constant(inst, rep.form);
    if (!(rep.exact_k < ExtReal(1.0)))
        throw PreconditionFailed("exact contraction constant " + to_string(rep.exact_k) + " is not below 1");
    rep.fixed_points = enumerate_coupled_fixed_points(inst);
    rep.mixed_monotone = exact_mixed_monotone(inst);

    const OrderedPointSpace ordered = inst.to_ordered_space();
    const CoupledOperator op = inst.to_operator();
    const auto& le = inst.leq;

    bool tame_table = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (inst.distance[i][j].is_infinite() || (i == j && inst.distance[i][j] > ExtReal(0.0))) tame_table = false;

    SolveConfig run_cfg = cfg;
    run_cfg.verify_hypotheses = false;
    for (std::size_t x0 = 0; x0 < n; ++x0) {
        for (std::size_t y0 = 0; y0 < n; ++y0) {
            const std::size_t fx = inst.f[x0][y0], fy = inst.f[y0][x0];
            const bool forward = le[x0][fx] && le[fy][y0];
            const bool backward = le[fx][x0] && le[y0][fy];
            if (!(forward || (cfg.mode == SolveMode::berinde && backward))) continue;
            const SolveReport s = solve(ordered, op, Label{x0}, Label{y0}, run_cfg);
            OracleRun run{x0, y0, s.status, std::nullopt, s.iterations, false};
            if (s.candidate) {
                run.candidate = std::make_pair(label_of(s.candidate->first), label_of(s.candidate->second));
                run.in_list = std::find(rep.fixed_points.begin(), rep.fixed_points.end(), *run.candidate) !=
                              rep.fixed_points.end();
            }
            if (s.status == SolveStatus::converged && !run.in_list)
                throw OracleMismatch("solver candidate " + pair_text(inst, run.candidate->first, run.candidate->second) +
                                     " from start " + pair_text(inst, x0, y0) +
                                     " is not among the enumerated coupled fixed points");
            if (s.status != SolveStatus::converged && rep.mixed_monotone && tame_table)
                throw OracleMismatch("solver ended with status " + std::string(to_string(s.status)) + " from start " +
                                     pair_text(inst, x0, y0) +
                                     " although the instance is mixed monotone and contractive");
            rep.runs.push_back(run);
        }
    }
    if (rep.runs.empty()) throw PreconditionFailed("no starting pair satisfies the order hypothesis");

    const Space& space = ordered.base;
    for (const auto& [px, py] : rep.fixed_points) {
        for (const auto& [qx, qy] : rep.fixed_points) {
            const PairPoint p{Label{px}, Label{py}}, q{Label{qx}, Label{qy}};
            if (!(pair_leq(ordered, p, q) || pair_leq(ordered, q, p))) continue;
            if (d_plus(space, p, q).is_infinite()) continue;
            const bool same = px == qx && py == qy;
            if (!same)
                throw OracleMismatch("distinct comparable fixed points " + pair_text(inst, px, py) + " and " +
                                     pair_text(inst, qx, qy) + " at finite D+ although the exact constant is " +
                                     to_string(rep.exact_k) + " < 1: the instance is inconsistent");
            const ProbeReport pr = probe_uniqueness_comparable(ordered, op, p, q, cfg);
            ++rep.probes_checked;
            if (pr.verdict != ProbeVerdict::same)
                throw OracleMismatch("uniqueness probe reports " + std::string(to_string(pr.verdict)) + " for " +
                                     pair_text(inst, px, py) + " against itself");
        }
    }

    const ContractionEstimate est =
        estimate_contraction(ordered, op, rep.form, cfg.hypothesis_samples, cfg.seed, cfg.declared_k);
    rep.sampled_k_hat = est.k_hat;
    if (rep.exact_k.is_finite() && est.k_hat > ExtReal(rep.exact_k.value() * (1.0 + 1e-12)))
        throw OracleMismatch("sampled contraction estimate " + to_string(est.k_hat) + " exceeds the exact constant " +
                             to_string(rep.exact_k));
    rep.pass = true;
    return rep;
}

FiniteInstance engineered_instance(std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 0.5);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 16)(rng);
        const std::size_t roots = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        std::vector<std::size_t> parent(n), level(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < roots) {
                parent[i] = i;
                continue;
            }
            parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
            level[i] = level[parent[i]] + 1;
        }
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = i < roots ? (roots == 1 ? 0.0 : 1.0) : std::pow(16.0, double(level[i])) * (1.0 + jitter(rng));

        FiniteInstance inst;
        inst.labels.resize(n);
        inst.distance.assign(n, std::vector<ExtReal>(n, ExtReal(0.0)));
        inst.leq.assign(n, std::vector<bool>(n, false));
        inst.f.assign(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            inst.labels[i] = "t" + std::to_string(i);
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) inst.distance[i][j] = ExtReal(w[i] + w[j]);
            // i <= j iff j is an ancestor-or-self of i
            for (std::size_t a = i;; a = parent[a]) {
                inst.leq[i][a] = true;
                if (parent[a] == a) break;
            }
        }
        auto root_of = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i];
            return i;
        };
        const int variant = std::uniform_int_distribution<int>(0, 2)(rng);
        const std::size_t fixed_root = std::uniform_int_distribution<std::size_t>(0, roots - 1)(rng);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                switch (variant) {
                case 0: inst.f[x][y] = parent[x]; break;
                case 1: inst.f[x][y] = parent[parent[x]]; break;
                default: inst.f[x][y] = roots == 1 ? fixed_root : root_of(x); break;
                }
            }
        if (exact_contraction_constant(inst, ContractionForm::bhaskar_plus) < ExtReal(1.0)) return inst;
    }
    throw BadParams("no contractive instance found for seed " + std::to_string(seed));
}

} // namespace jscfp
