#include "cli.hpp"

#include <fstream>
#include <sstream>

namespace jscfp::cli {

namespace {

// Dotted-path lookup helpers. Every failure names the key.

const Json* find(const Json& root, const std::string& key) {
    const Json* node = &root;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = key.find('.', start);
        const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (node->is_array()) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) return nullptr;
            const std::size_t idx = std::stoul(part);
            if (idx >= node->size()) return nullptr;
            node = &(*node)[idx];
        } else {
            if (!node->is_object() || !node->contains(part)) return nullptr;
            node = &(*node)[part];
        }
        if (dot == std::string::npos) return node;
        start = dot + 1;
    }
}

const Json& require(const Json& root, const std::string& key) {
    const Json* j = find(root, key);
    if (!j || j->is_null()) throw ConfigError(key, "missing required key");
    return *j;
}

std::string get_string(const Json& root, const std::string& key, std::optional<std::string> fallback = {}) {
    const Json* j = find(root, key);
    if (!j || j->is_null()) {
        if (fallback) return *fallback;
        throw ConfigError(key, "missing required key");
    }
    if (!j->is_string()) throw ConfigError(key, "expected a string, got " + j->dump());
    return j->get<std::string>();
}

std::size_t get_count(const Json& root, const std::string& key, std::size_t fallback) {
    const Json* j = find(root, key);
    if (!j || j->is_null()) return fallback;
    if (!j->is_number_integer() || j->get<long long>() < 0)
        throw ConfigError(key, "expected a nonnegative integer, got " + j->dump());
    return j->get<std::size_t>();
}

bool get_bool(const Json& root, const std::string& key, bool fallback) {
    const Json* j = find(root, key);
    if (!j || j->is_null()) return fallback;
    if (!j->is_boolean()) throw ConfigError(key, "expected true or false, got " + j->dump());
    return j->get<bool>();
}

ExtReal get_ext(const Json& root, const std::string& key, std::optional<ExtReal> fallback = {}) {
    const Json* j = find(root, key);
    if (!j || j->is_null()) {
        if (fallback) return *fallback;
        throw ConfigError(key, "missing required key");
    }
    try {
        ExtReal v;
        from_json(*j, v);
        return v;
    } catch (const Error& e) {
        throw ConfigError(key, e.what());
    }
}

double get_real(const Json& root, const std::string& key, std::optional<double> fallback = {}) {
    const ExtReal v = get_ext(root, key, fallback ? std::optional<ExtReal>(*fallback) : std::nullopt);
    if (!v.is_finite()) throw ConfigError(key, "expected a finite number");
    return v.value();
}

// The assembled problem: space, order and operator.
struct Problem {
    SpaceKind kind = SpaceKind::standard_real;
    ProductMode product = ProductMode::plus;
    std::optional<OrderedPointSpace> ordered;
    std::optional<CoupledOperator> op;
    std::uint64_t seed = 0;

    bool labelled() const { return kind == SpaceKind::finite_discrete; }
    const Space& space() const { return ordered->base; }
};

template <class Fn>
auto keyed(const std::string& key, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const BadParams& e) {
        throw ConfigError(key, e.what());
    } catch (const DomainViolation& e) {
        throw ConfigError(key, e.what());
    }
}

std::uint64_t get_seed(const Json& config) {
    const Json* j = find(config, "seed");
    if (!j || j->is_null()) return 0;
    if (!j->is_number_integer() || j->get<long long>() < 0)
        throw ConfigError("seed", "expected a nonnegative integer, got " + j->dump());
    return j->get<std::uint64_t>();
}

Problem load_space(const Json& config) {
    Problem p;
    p.seed = get_seed(config);
    const std::string kind = get_string(config, "space.kind");
    p.kind = keyed("space.kind", [&] { return parse_space_kind(kind); });
    SpaceParams params;
    params.labels = get_count(config, "space.labels", 0);
    params.sample_scale = get_real(config, "space.sample_scale", 10.0);
    Space space = keyed("space", [&] { return builtin_space(p.kind, params); });

    const std::string order = get_string(config, "order.kind", p.labelled() ? "chain" : "usual");
    const OrderKind ok = keyed("order.kind", [&] { return parse_order_kind(order); });
    p.ordered = keyed("order.kind", [&] { return make_order(std::move(space), ok); });

    const std::string product = get_string(config, "product", "plus");
    p.product = keyed("product", [&] { return parse_product_mode(product); });
    return p;
}

void load_operator(const Json& config, Problem& p) {
    const std::string name = get_string(config, "operator.name");
    if (name == "linear_mix") {
        const double a = get_real(config, "operator.params.a");
        const double b = get_real(config, "operator.params.b");
        p.op = keyed("operator.params", [&] { return linear_mix(a, b); });
    } else if (name == "constant") {
        const Json& c = require(config, "operator.params.c");
        const Point pt = keyed("operator.params.c", [&] { return point_from_json(c, p.labelled()); });
        if (!p.space().contains(pt)) throw ConfigError("operator.params.c", to_string(pt) + " is outside the space");
        p.op = constant_operator(pt);
    } else if (name == "table") {
        const Json& v = require(config, "operator.params.values");
        std::vector<std::vector<std::size_t>> values;
        try {
            values = v.get<std::vector<std::vector<std::size_t>>>();
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("operator.params.values", e.what());
        }
        p.op = keyed("operator.params.values", [&] { return table_operator(std::move(values)); });
    } else {
        throw ConfigError("operator.name", "unknown operator '" + name + "' (linear_mix, constant, table)");
    }
}

Point load_point(const Json& config, const std::string& key, const Problem& p) {
    const Json& j = require(config, key);
    const Point pt = keyed(key, [&] { return point_from_json(j, p.labelled()); });
    if (!p.space().contains(pt)) throw ConfigError(key, to_string(pt) + " is outside " + p.space().name);
    return pt;
}

PairPoint load_pair(const Json& config, const std::string& key, const Problem& p) {
    const Json& j = require(config, key);
    if (!j.is_array() || j.size() != 2) throw ConfigError(key, "expected a pair [x, y], got " + j.dump());
    return {load_point(config, key + ".0", p), load_point(config, key + ".1", p)};
}

SolveConfig load_solve(const Json& config, std::uint64_t seed) {
    SolveConfig cfg;
    const std::string mode = get_string(config, "solve.mode", "bhaskar_plus");
    cfg.mode = keyed("solve.mode", [&] { return parse_solve_mode(mode); });
    cfg.max_iters = get_count(config, "solve.max_iters", cfg.max_iters);
    cfg.residual_tol = get_real(config, "solve.residual_tol", cfg.residual_tol);
    cfg.divergence_cap = get_ext(config, "solve.divergence_cap", cfg.divergence_cap);
    cfg.horizon_for_delta = get_count(config, "solve.horizon_for_delta", cfg.horizon_for_delta);
    cfg.declared_k = get_real(config, "solve.declared_k", cfg.declared_k);
    cfg.hypothesis_samples = get_count(config, "solve.hypothesis_samples", cfg.hypothesis_samples);
    cfg.verify_hypotheses = get_bool(config, "solve.verify_hypotheses", cfg.verify_hypotheses);
    cfg.seed = seed;
    try {
        cfg.validate();
    } catch (const BadParams& e) {
        const std::string what = e.what();
        const std::size_t space = what.find(' ');
        throw ConfigError(what.substr(0, space), what.substr(space + 1));
    }
    return cfg;
}

Json envelope(std::string_view sub, const Json& config, std::uint64_t seed) {
    return Json{{"subcommand", sub}, {"seed", seed}, {"config", config}};
}

Outcome finish(Json report, int code) {
    report["exit_code"] = code;
    return {code, std::move(report), std::nullopt};
}

Outcome run_axioms(const Json& config) {
    const Problem p = load_space(config);
    const std::size_t samples = get_count(config, "axioms.samples", 10000);
    const std::size_t trials = get_count(config, "axioms.trials", 20);
    const std::size_t length = get_count(config, "axioms.length", 64);
    const std::size_t horizon = get_count(config, "axioms.horizon", 64);
    if (samples == 0) throw ConfigError("axioms.samples", "must be >= 1");
    if (length == 0 || horizon == 0) throw ConfigError("axioms.length", "length and horizon must be >= 1");

    auto suite = [&](const auto& space) {
        Json checks = Json::array();
        checks.push_back(check_d1(space, samples, p.seed));
        checks.push_back(check_d2(space, samples, p.seed + 1));
        const auto t = sample_d3_trials(space, trials, length, p.seed + 2);
        try {
            checks.push_back(check_d3(space, t, horizon));
        } catch (const NotConvergent& e) {
            throw ConfigError("axioms.length", e.what());
        }
        bool pass = true;
        for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
        return Json{{"space", space.name}, {"d3_constant", space.d3_constant}, {"checks", checks}, {"pass", pass}};
    };

    Json result;
    result["base"] = suite(p.space());
    result["lift"] = suite(lift_space(p.space(), p.product));
    result["order"] = check_partial_order(*p.ordered, samples, p.seed + 3);
    const bool pass = result["base"]["pass"].get<bool>() && result["lift"]["pass"].get<bool>() &&
                      result["order"]["pass"].get<bool>();
    result["pass"] = pass;
    Json report = envelope("axioms", config, p.seed);
    report["result"] = std::move(result);
    return finish(std::move(report), pass ? kPass : kCheckedFailure);
}

Outcome run_hypotheses(const Json& config) {
    Problem p = load_space(config);
    load_operator(config, p);
    const PairPoint start = load_pair(config, "start", p);
    const SolveConfig cfg = load_solve(config, p.seed);
    Json report = envelope("hypotheses", config, p.seed);
    try {
        const HypothesisReport h = check_hypotheses(*p.ordered, *p.op, start.first, start.second, cfg);
        report["result"] = h;
        return finish(std::move(report), h.all_pass ? kPass : kCheckedFailure);
    } catch (const EvaluationError& e) {
        report["error"] = Json{{"key", "operator"}, {"message", e.what()}};
        return finish(std::move(report), kConfigError);
    }
}

Outcome run_solve(const Json& config) {
    Problem p = load_space(config);
    load_operator(config, p);
    const PairPoint start = load_pair(config, "start", p);
    const SolveConfig cfg = load_solve(config, p.seed);
    const SolveReport r = solve(*p.ordered, *p.op, start.first, start.second, cfg);
    Json report = envelope("solve", config, p.seed);
    report["result"] = r;
    int code = r.status == SolveStatus::converged ? kPass : kCheckedFailure;
    if (r.status == SolveStatus::evaluation_error) {
        code = kConfigError;
        report["error"] = Json{{"key", "operator"}, {"message", r.error}};
    }
    Outcome out = finish(std::move(report), code);
    std::ostringstream csv;
    write_trace_csv(csv, r);
    out.trace_csv = csv.str();
    return out;
}

Outcome run_probe(const Json& config) {
    Problem p = load_space(config);
    load_operator(config, p);
    const SolveConfig cfg = load_solve(config, p.seed);
    const std::string kind = get_string(config, "probe.kind");
    Json report = envelope("probe", config, p.seed);
    try {
        ProbeReport r;
        if (kind == "uniqueness_comparable") {
            r = probe_uniqueness_comparable(*p.ordered, *p.op, load_pair(config, "probe.p", p),
                                            load_pair(config, "probe.q", p), cfg);
        } else if (kind == "uniqueness_bridged") {
            r = probe_uniqueness_bridged(*p.ordered, *p.op, load_pair(config, "probe.p", p),
                                         load_pair(config, "probe.q", p), load_pair(config, "probe.bridge", p), cfg);
        } else if (kind == "component_equality") {
            std::optional<PairPoint> x0y0;
            if (const Json* j = find(config, "probe.x0y0"); j && !j->is_null()) x0y0 = load_pair(config, "probe.x0y0", p);
            ComponentProbeOptions opts;
            if (const Json* j = find(config, "probe.bound"); j && !j->is_null())
                opts.bound = load_point(config, "probe.bound", p);
            if (const Json* j = find(config, "probe.case"); j && !j->is_null()) {
                const std::string c = get_string(config, "probe.case");
                opts.force = keyed("probe.case", [&] { return parse_component_case(c); });
            }
            r = probe_component_equality(*p.ordered, *p.op, load_pair(config, "probe.fp", p), x0y0, cfg, opts);
        } else {
            throw ConfigError("probe.kind", "unknown probe '" + kind +
                                                "' (uniqueness_comparable, uniqueness_bridged, component_equality)");
        }
        report["result"] = r;
        return finish(std::move(report), r.pass ? kPass : kCheckedFailure);
    } catch (const PreconditionFailed& e) {
        report["result"] = nullptr;
        report["precondition_failed"] = e.what();
        return finish(std::move(report), kCheckedFailure);
    } catch (const EvaluationError& e) {
        report["error"] = Json{{"key", "operator"}, {"message", e.what()}};
        return finish(std::move(report), kConfigError);
    }
}

FiniteInstance load_instance(const Json& config) {
    if (const Json* j = find(config, "oracle.instance"); j && !j->is_null())
        return keyed("oracle.instance", [&] { return j->get<FiniteInstance>(); });
    if (const Json* j = find(config, "oracle.fixture"); j && !j->is_null()) {
        const std::string path = get_string(config, "oracle.fixture");
        std::ifstream in(path);
        if (!in) throw ConfigError("oracle.fixture", "cannot open '" + path + "'");
        Json fixture;
        try {
            fixture = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("oracle.fixture", e.what());
        }
        return keyed("oracle.fixture", [&] { return fixture.get<FiniteInstance>(); });
    }
    if (const Json* j = find(config, "oracle.engineered"); j && !j->is_null()) {
        const std::size_t s = get_count(config, "oracle.engineered.seed", 0);
        return keyed("oracle.engineered", [&] { return engineered_instance(s); });
    }
    throw ConfigError("oracle", "needs one of instance, fixture or engineered");
}

Outcome run_oracle(const Json& config) {
    const std::uint64_t seed = get_seed(config);
    const FiniteInstance inst = load_instance(config);
    const SolveConfig cfg = load_solve(config, seed);
    Json report = envelope("oracle", config, seed);
    report["instance"] = inst;
    try {
        report["result"] = cross_check(inst, cfg);
        return finish(std::move(report), kPass);
    } catch (const OracleMismatch& e) {
        report["result"] = nullptr;
        report["mismatch"] = e.what();
        return finish(std::move(report), kCheckedFailure);
    } catch (const PreconditionFailed& e) {
        report["result"] = nullptr;
        report["precondition_failed"] = e.what();
        return finish(std::move(report), kCheckedFailure);
    }
}

} // namespace

Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    try {
        Json j = Json::parse(in);
        if (!j.is_object()) throw ConfigError("config", "top level must be an object");
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config", std::string("parse error in '") + path + "': " + e.what());
    }
}

void apply_override(Json& config, std::string_view assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError(std::string(assignment), "override must look like key=value");
    const std::string key(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    Json value;
    try {
        value = Json::parse(text);
    } catch (const nlohmann::json::exception&) {
        value = text;
    }
    Json* node = &config;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = key.find('.', start);
        const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) throw ConfigError(key, "empty path segment");
        if (node->is_null()) *node = Json::object();
        if (node->is_array()) {
            std::size_t idx = 0;
            try {
                idx = std::stoul(part);
            } catch (const std::exception&) {
                throw ConfigError(key, "'" + part + "' is not an array index");
            }
            if (idx >= node->size()) throw ConfigError(key, "index " + part + " is out of range");
            node = &(*node)[idx];
        } else if (node->is_object()) {
            node = &(*node)[part];
        } else {
            throw ConfigError(key, "cannot descend into a scalar at '" + part + "'");
        }
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    *node = std::move(value);
}

Outcome run(std::string_view subcommand, const Json& config) {
    if (subcommand == "axioms") return run_axioms(config);
    if (subcommand == "hypotheses") return run_hypotheses(config);
    if (subcommand == "solve") return run_solve(config);
    if (subcommand == "probe") return run_probe(config);
    if (subcommand == "oracle") return run_oracle(config);
    throw ConfigError("subcommand", "unknown subcommand '" + std::string(subcommand) + "'");
}

} // namespace jscfp::cli
