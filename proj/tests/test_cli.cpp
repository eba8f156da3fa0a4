#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace jscfp;
using namespace jscfp::cli;

namespace {

const std::string kSource = JSCFP_SOURCE_DIR;
const std::string kTool = JSCFP_TOOL;

Json config(const std::string& name) { return load_config(kSource + "/configs/" + name); }

std::string error_key(const std::string& sub, Json cfg) {
    try {
        run(sub, cfg);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int tool(const std::string& args) {
    const std::string cmd = "cd '" + kSource + "' && '" + kTool + "' " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Overrides, DottedPaths) {
    Json c = config("worked_example.json");
    apply_override(c, "solve.residual_tol=1e-12");
    EXPECT_EQ(c["solve"]["residual_tol"], 1e-12);
    apply_override(c, "start.1=5");
    EXPECT_EQ(c["start"][1], 5);
    apply_override(c, "operator.name=constant");
    EXPECT_EQ(c["operator"]["name"], "constant");
    apply_override(c, "new.deep.key=[1,2]");
    EXPECT_EQ(c["new"]["deep"]["key"], Json::array({1, 2}));
    EXPECT_THROW(apply_override(c, "novalue"), ConfigError);
    EXPECT_THROW(apply_override(c, "=3"), ConfigError);
    EXPECT_THROW(apply_override(c, "start.9=1"), ConfigError);
    EXPECT_THROW(apply_override(c, "start.x=1"), ConfigError);
    EXPECT_THROW(apply_override(c, "seed.inner=1"), ConfigError);
    EXPECT_THROW(apply_override(c, "a..b=1"), ConfigError);
}

TEST(Run, WorkedSolve) {
    const Outcome o = run("solve", config("worked_example.json"));
    EXPECT_EQ(o.exit_code, kPass);
    const Json& res = o.report["result"];
    EXPECT_EQ(res["status"], "converged");
    EXPECT_LE(std::fabs(res["candidate"][0].get<double>()), 1e-9);
    EXPECT_LE(std::fabs(res["candidate"][1].get<double>()), 1e-9);
    ASSERT_TRUE(o.trace_csv);
    EXPECT_EQ(o.trace_csv->substr(0, o.trace_csv->find('\n')), "n,x_n,y_n,step_dplus,residual");
    EXPECT_EQ(o.report["subcommand"], "solve");
    EXPECT_EQ(o.report["seed"], 7);
    EXPECT_EQ(o.report["exit_code"], 0);
}

TEST(Run, AxiomsOnDislocated) {
    const Outcome o = run("axioms", config("dislocated_axioms.json"));
    EXPECT_EQ(o.exit_code, kPass);
    EXPECT_TRUE(o.report["result"]["pass"].get<bool>());
}

TEST(Run, ExpansionDiverges) {
    const Outcome o = run("solve", config("expansion.json"));
    EXPECT_EQ(o.exit_code, kCheckedFailure);
    EXPECT_EQ(o.report["result"]["status"], "diverged");
}

TEST(Run, HypothesesAndProbes) {
    EXPECT_EQ(run("hypotheses", config("worked_example.json")).exit_code, kPass);
    const Outcome probe = run("probe", config("worked_example.json"));
    EXPECT_EQ(probe.exit_code, kPass);
    EXPECT_EQ(probe.report["result"]["case"], "III");
    const Outcome refused = run("probe", config("non_unique.json"));
    EXPECT_EQ(refused.exit_code, kCheckedFailure);
    EXPECT_TRUE(refused.report["result"].is_null());
}

TEST(Run, Oracle) {
    EXPECT_EQ(run("oracle", config("oracle_engineered.json")).exit_code, kPass);
    Json c = config("oracle_fixture.json");
    c["oracle"]["fixture"] = kSource + "/configs/fixtures/chain_half.json";
    const Outcome o = run("oracle", c);
    EXPECT_EQ(o.exit_code, kPass);
    EXPECT_EQ(o.report["result"]["exact_k"], 0.5);
}

TEST(Run, EvaluationErrorExitsTwo) {
    Json c = config("worked_example.json");
    c["start"] = Json::array({"inf", "inf"});
    c["solve"]["verify_hypotheses"] = false;
    const Outcome o = run("solve", c);
    EXPECT_EQ(o.exit_code, kConfigError);
    EXPECT_TRUE(o.report.contains("error"));
}

TEST(Run, ConfigErrorsNameTheKey) {
    const Json base = config("worked_example.json");
    auto with = [&](const std::string& assignment) {
        Json c = base;
        apply_override(c, assignment);
        return c;
    };
    EXPECT_EQ(error_key("solve", with("space.kind=hilbert")), "space.kind");
    EXPECT_EQ(error_key("solve", with("order.kind=lexical")), "order.kind");
    EXPECT_EQ(error_key("solve", with("operator.name=cosine")), "operator.name");
    EXPECT_EQ(error_key("solve", with("operator.params.a=\"x\"")), "operator.params.a");
    EXPECT_EQ(error_key("solve", with("start=[1]")), "start");
    EXPECT_EQ(error_key("solve", with("solve.max_iters=0")), "solve.max_iters");
    EXPECT_EQ(error_key("solve", with("solve.declared_k=1.5")), "solve.declared_k");
    EXPECT_EQ(error_key("solve", with("solve.residual_tol=-1")), "solve.residual_tol");
    EXPECT_EQ(error_key("solve", with("solve.mode=newton")), "solve.mode");
    EXPECT_EQ(error_key("solve", with("seed=-4")), "seed");
    EXPECT_EQ(error_key("probe", with("probe.kind=nothing")), "probe.kind");
    EXPECT_EQ(error_key("probe", with("probe.case=IV")), "probe.case");
    EXPECT_EQ(error_key("oracle", base), "oracle");
    EXPECT_THROW(run("dance", base), ConfigError);
}

TEST(Run, Deterministic) {
    for (const char* sub : {"axioms", "hypotheses", "solve", "probe"}) {
        const Json c = config("worked_example.json");
        EXPECT_EQ(run(sub, c).report.dump(), run(sub, c).report.dump()) << sub;
    }
}

TEST(Run, SeedChangesSampledReports) {
    Json a = config("worked_example.json"), b = a;
    b["seed"] = 8;
    EXPECT_NE(run("hypotheses", a).report["result"].dump(), run("hypotheses", b).report["result"].dump());
}

TEST(Tool, ExitCodesAndOutputs) {
    const auto dir = std::filesystem::temp_directory_path() / "jscfp_cli_test";
    std::filesystem::create_directories(dir);
    const auto report = dir / "report.json", trace = dir / "trace.csv";
    EXPECT_EQ(tool("solve --config configs/worked_example.json --out-report '" + report.string() + "' --out-trace '" +
                   trace.string() + "'"),
              0);
    const Json rep = Json::parse(slurp(report));
    EXPECT_EQ(rep["result"]["status"], "converged");
    EXPECT_EQ(slurp(trace).substr(0, 30), "n,x_n,y_n,step_dplus,residual\n");
    const std::string first = slurp(report);
    EXPECT_EQ(tool("solve --config configs/worked_example.json --out-report '" + report.string() + "'"), 0);
    EXPECT_EQ(slurp(report), first);

    EXPECT_EQ(tool("solve --config configs/expansion.json"), 1);
    EXPECT_EQ(tool("axioms --config configs/dislocated_axioms.json"), 0);
    EXPECT_EQ(tool("solve --config configs/worked_example.json --set solve.max_iters=0 --out-report '" +
                   report.string() + "'"),
              2);
    EXPECT_EQ(Json::parse(slurp(report))["error"]["key"], "solve.max_iters");
    EXPECT_EQ(tool("solve --config configs/does_not_exist.json"), 2);
    EXPECT_EQ(tool("solve"), 2);
    EXPECT_EQ(tool("--config configs/worked_example.json"), 2);
    EXPECT_EQ(tool("solve --config configs/worked_example.json --seed 9 --set solve.residual_tol=1e-12 --out-report '" +
                   report.string() + "'"),
              0);
    const Json seeded = Json::parse(slurp(report));
    EXPECT_EQ(seeded["seed"], 9);
    EXPECT_EQ(seeded["config"]["solve"]["residual_tol"], 1e-12);
    std::filesystem::remove_all(dir);
}
