#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liereach/cli.hpp"
#include "liereach/config.hpp"
#include "liereach/presets.hpp"

using namespace liereach;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("liereach_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("liereach_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

const std::filesystem::path kSource = LIEREACH_SOURCE_DIR;

}  // namespace

TEST(Cli, HelpDocumentsEveryFlag) {
  const std::vector<std::string> source{"CONFIG", "--preset", "--rep", "--seed", "--threads", "--out"};
  const std::vector<std::string> caps{"--cap", "--iter-cap", "--k-max", "--format"};
  const std::map<std::string, std::vector<std::string>> extra{
      {"analyze", caps},
      {"closure", caps},
      {"coverage", {"--cap", "--iter-cap", "--k-max", "--format", "--order"}},
      {"simulate", {"--format", "--schedule", "--initial", "--target"}},
      {"experiment trotter", {"--x", "--y", "--s", "--ns"}},
      {"experiment commutator", {"--x", "--y", "--s", "--ns"}},
      {"experiment attainability", {"--x", "--t", "--eps", "--grid", "--initial"}},
      {"experiment reach", {"--targets", "--segments", "--restarts", "--iterations", "--initial"}},
  };
  for (const auto& [cmd, flags] : extra) {
    SCOPED_TRACE(cmd);
    std::vector<std::string> args;
    std::istringstream words(cmd);
    for (std::string w; words >> w;) args.push_back(w);
    args.push_back("--help");
    Outcome r = run(args);
    EXPECT_EQ(r.code, 0);
    for (const auto& f : source) EXPECT_NE(r.out.find(f), std::string::npos) << f;
    for (const auto& f : flags) EXPECT_NE(r.out.find(f + " "), std::string::npos) << f;
  }
  for (const std::vector<std::string> args : {std::vector<std::string>{"--help"}, {"experiment", "--help"}}) {
    Outcome r = run(args);
    EXPECT_EQ(r.code, 0);
  }
  Outcome p = run({"presets", "--help"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("--export"), std::string::npos);
  EXPECT_NE(p.out.find("--format"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--preset", "nope"}).code, 2);
  EXPECT_EQ(run({"analyze", "--preset", "pt", "--cap", "1"}).code, 2);
  EXPECT_EQ(run({"analyze", "--preset", "pt", "--format", "xml"}).code, 2);

  Outcome empty = run({"analyze", write_temp("empty.sysconfig", "")});
  EXPECT_EQ(empty.code, 2);
  EXPECT_NE(empty.err.find("parse error"), std::string::npos);

  // [Lx,Ly] = iLz + iLx in the exported pt preset: not a Lie algebra.
  json cfg = json::parse(read(kSource / "presets" / "pt.sysconfig"));
  cfg["algebra"]["brackets"]["0,1"].push_back(json::array({0, json::array({0, 1}), json::array({1, 1})}));
  Outcome bad = run({"analyze", write_temp("bad.sysconfig", cfg.dump())});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("Jacobi"), std::string::npos) << bad.err;

  // Top level of the truncated pt representation is outside the interior.
  const std::string sched = write_temp("sched.csv", "duration,u1,u2\n0.5,1,0\n");
  EXPECT_EQ(run({"simulate", "--preset", "pt", "--schedule", sched, "--initial", "39"}).code, 4);
}

TEST(Cli, PresetFilesMatchBuiltins) {
  for (const auto& info : preset_list()) {
    SCOPED_TRACE(info.name);
    SystemConfig file = load_config((kSource / "presets" / (info.name + ".sysconfig")).string());
    EXPECT_EQ(config_to_json(file), config_to_json(preset_config(info.name)));
  }
  const auto dir = temp_dir("export");
  ASSERT_EQ(run({"presets", "--export", dir.string()}).code, 0);
  for (const auto& info : preset_list())
    EXPECT_EQ(read(dir / (info.name + ".sysconfig")), read(kSource / "presets" / (info.name + ".sysconfig")));
}

TEST(Cli, GoldenAnalyzeReports) {
  for (const std::string name : {"pt", "st", "st1", "bt", "lloyd"}) {
    SCOPED_TRACE(name);
    const std::string golden = read(kSource / "tests" / "golden" / ("analyze_" + name + ".json"));
    ASSERT_FALSE(golden.empty());
    for (const std::string threads : {"1", "3", "1"}) {
      Outcome r = run({"analyze", "--preset", name, "--seed", "42", "--threads", threads});
      ASSERT_EQ(r.code, 0) << r.err;
      EXPECT_EQ(r.out, golden) << "threads " << threads;
    }
  }
}

TEST(Cli, AnalyzeFromPresetFileMatchesPreset) {
  Outcome a = run({"analyze", (kSource / "presets" / "pt.sysconfig").string()});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, read(kSource / "tests" / "golden" / "analyze_pt.json"));
}

TEST(Cli, TextReportCarriesTheSameNumbers) {
  Outcome j = run({"analyze", "--preset", "st1"});
  Outcome t = run({"analyze", "--preset", "st1", "--format", "text"});
  ASSERT_EQ(j.code, 0);
  ASSERT_EQ(t.code, 0);
  json report = json::parse(j.out);
  EXPECT_EQ(report["classification"], "ApproxStrongSmoothControllable");
  EXPECT_NE(t.out.find("classification: ApproxStrongSmoothControllable"), std::string::npos);
  EXPECT_NE(t.out.find("dim_A: " + report["dim_A"].dump()), std::string::npos);
  for (const auto& c : report["coverage"])
    EXPECT_NE(t.out.find("fraction=" + c["fraction"].dump()), std::string::npos);
}

TEST(Cli, AnalyzeExamples) {
  json pt = json::parse(run({"analyze", "--preset", "pt"}).out);
  EXPECT_EQ(pt["classification"], "StronglyAnalyticallyControllable");
  EXPECT_EQ(pt["dim_A"], 4);
  EXPECT_EQ(pt["seed"], 42);

  json st1 = json::parse(run({"analyze", "--preset", "st1", "--cap", "4"}).out);
  EXPECT_EQ(st1["classification"], "ApproxStrongSmoothControllable");
  EXPECT_EQ(st1["coverage"][2]["n"], 3);
  EXPECT_EQ(st1["coverage"][2]["fraction"], 1.0);

  json seeded = json::parse(run({"analyze", "--preset", "pt", "--seed", "7"}).out);
  EXPECT_EQ(seeded["seed"], 7);
}

TEST(Cli, ClosureShowsGrowth) {
  Outcome r = run({"closure", "--preset", "st", "--cap", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json c = json::parse(r.out);
  EXPECT_EQ(c["max_order"], 3);
  ASSERT_EQ(c["growth"].size(), 2u);
  EXPECT_LT(c["growth"][0]["dim"].get<int>(), c["growth"][1]["dim"].get<int>());
  EXPECT_NE(c["note"].get<std::string>().find("grows"), std::string::npos);

  json pt = json::parse(run({"closure", "--preset", "pt"}).out);
  EXPECT_EQ(pt["dim"], 4);
  EXPECT_NE(pt["note"].get<std::string>().find("saturated"), std::string::npos);
}

TEST(Cli, CoverageListsMissingMonomials) {
  json full = json::parse(run({"coverage", "--preset", "lloyd", "--order", "3"}).out);
  EXPECT_EQ(full["coverage"][0]["fraction"], 1.0);
  json pt = json::parse(run({"coverage", "--preset", "pt", "--order", "2"}).out);
  EXPECT_EQ(pt["coverage"][0]["total"], 9);
  // The Casimir adds one quadratic direction, but no single quadratic
  // monomial lies in the span.
  EXPECT_EQ(pt["coverage"][0]["covered"], 4);
  EXPECT_EQ(pt["coverage"][0]["missing"].size(), 6u);
}

TEST(Cli, SimulateMatchesRotationFormula) {
  const double t = 0.9;
  std::ostringstream csv;
  csv.precision(17);
  csv << "duration,u1\n" << t / 2 << ",1\n" << t / 2 << ",1\n";
  Outcome r = run({"simulate", "--preset", "qubit", "--schedule", write_temp("rot.csv", csv.str()), "--target", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  // exp(-i t (sz + sx) / 2): flip probability sin^2(t / sqrt 2) / 2.
  const double expected = std::pow(std::sin(t / std::sqrt(2.0)), 2) / 2;
  EXPECT_NEAR(j["fidelity"].get<double>(), expected, 1e-12);
  EXPECT_NEAR(j["norm"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["segments"], 2);
}

TEST(Cli, ExperimentsEmitCsv) {
  Outcome tr = run({"experiment", "trotter", "--preset", "qubit", "--ns", "4,16"});
  ASSERT_EQ(tr.code, 0) << tr.err;
  EXPECT_EQ(tr.out.rfind("n,error\n4,", 0), 0u) << tr.out;

  Outcome at = run({"experiment", "attainability", "--preset", "bt"});
  ASSERT_EQ(at.code, 0) << at.err;
  EXPECT_EQ(at.out.rfind("param,error,bound\n", 0), 0u);

  const auto dir = temp_dir("reach");
  Outcome re = run({"experiment", "reach", "--preset", "qubit", "--targets", "2", "--restarts", "5", "--out", dir.string()});
  ASSERT_EQ(re.code, 0) << re.err;
  EXPECT_EQ(read(dir / "reach.csv").rfind("target,fidelity,evaluations,best_restart\n", 0), 0u);
  EXPECT_EQ(read(dir / "schedule_0.csv").rfind("duration,u1\n", 0), 0u);

  Outcome again = run({"experiment", "reach", "--preset", "qubit", "--targets", "2", "--restarts", "5", "--out",
                   dir.string(), "--threads", "2"});
  ASSERT_EQ(again.code, 0);
  const std::string first = read(dir / "reach.csv");
  EXPECT_EQ(read(dir / "reach.csv"), first);
}

TEST(Cli, OutDirWritesReportFiles) {
  const auto dir = temp_dir("out");
  ASSERT_EQ(run({"analyze", "--preset", "pt", "--out", dir.string()}).code, 0);
  ASSERT_EQ(run({"analyze", "--preset", "pt", "--out", dir.string(), "--format", "text"}).code, 0);
  EXPECT_EQ(read(dir / "report.json"), read(kSource / "tests" / "golden" / "analyze_pt.json"));
  EXPECT_NE(read(dir / "report.txt").find("dim_A: 4"), std::string::npos);
}
