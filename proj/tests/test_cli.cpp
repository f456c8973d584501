#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "scor/cli.hpp"
#include "scor/dataset.hpp"
#include "scor/report.hpp"
#include "scor/simgen.hpp"

using namespace scor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "scor_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"fit"}).code == kExitUsage);
  CHECK(cli({"fit", "--data", "/nonexistent.csv"}).code == kExitUsage);
  CHECK(cli({"simulate", "--scenario", "4"}).code == kExitUsage);
  CHECK(cli({"simulate", "--n", "5,5,5"}).code == kExitUsage);
  CHECK(cli({"bench", "--methods", ""}).code == kExitUsage);
  CHECK(cli({"bench", "--methods", "ga"}).code == kExitUsage);
  CHECK(cli({"bench", "--preset", "rastrigin"}).code == kExitUsage);
  CHECK(cli({"bench", "--rho", "0.5"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  const fs::path bad = scratch("bad.csv");
  write(bad, "y,a\n0,1\n1,zz\n");
  const Run r = cli({"fit", "--data", bad.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("row 3") != std::string::npos);

  const fs::path gap = scratch("gap.csv");
  write(gap, "y,a\n0,1\n2,2\n");
  CHECK(cli({"fit", "--data", gap.string()}).code == kExitUsage);
}

TEST_CASE("numeric failures exit with 3") {
  const fs::path huge = scratch("huge.csv");
  write(huge, "y,a,b,c\n0,1.5e308,1.5e308,1.5e308\n0,1,2,3\n1,1.5e308,1.5e308,1.5e308\n1,3,2,1\n");
  const Run r = cli({"fit", "--data", huge.string()});
  CHECK(r.code == kExitNumeric);
}

TEST_CASE("fit on perfectly separated three-class data") {
  const fs::path data = scratch("sep.csv");
  write(data, "y,a,b\n0,0,1\n0,0.5,3\n1,2,2\n1,2.5,0\n2,4,1\n2,5,2\n");
  const fs::path out = scratch("sep.jsonl");
  const Run r = cli({"fit", "--data", data.string(), "--method", "all", "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(out);
  const RunReport report = parse_run_report(in);
  REQUIRE(report.solutions.size() == 4);
  const SolutionRecord& s = report.solutions[0];
  CHECK(s.method == "scor");
  CHECK(s.ehum == 1.0);
  REQUIRE(s.cutpoints.has_value());
  CHECK(s.cutpoints->youden_values == std::vector<double>{1.0, 1.0});
  CHECK(report.random_guess == doctest::Approx(1.0 / 6));
  for (const auto& sol : report.solutions) {
    CHECK(sol.ehum >= 0.0);
    CHECK(sol.ehum <= 1.0);
    CHECK_NOTHROW(UnitVector(sol.coefficients));
  }
  CHECK(r.out.find("scor") != std::string::npos);
}

TEST_CASE("fit with held-out data, merging and warnings") {
  const fs::path data = scratch("m.csv");
  write(data, "y,a,b,k\n0,0,1,1\n0,0.5,3,1\n1,2,2,1\n1,2.5,0,1\n3,4,1,1\n2,5,2,1\n");
  const fs::path out = scratch("m.jsonl");
  const Run r = cli({"fit", "--data", data.string(), "--test", data.string(), "--merge-labels", "3:2", "--objective",
                     "ulba", "--method", "scor,stepdown", "--starts", "3", "--seed", "5", "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.err.find("'k' is constant") != std::string::npos);
  std::ifstream in(out);
  const RunReport report = parse_run_report(in);
  REQUIRE(report.solutions.size() == 2);
  CHECK(report.solutions[0].test_ehum.has_value());
  CHECK(report.solutions[0].objective == "ulba");
  CHECK(report.class_sizes == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("fit beats step-down on an exported scenario-1 file") {
  const ScenarioSpec spec{.num_classes = 2, .dimension = 5, .n_per_class = {15, 15}, .seed = 21};
  const fs::path train = scratch("s1_train.csv"), test = scratch("s1_test.csv"), out = scratch("s1.jsonl");
  write_dataset(train.string(), make_dataset(generate(spec, derive_stream(21, 0, StreamRole::Train))));
  write_dataset(test.string(), make_dataset(generate(spec, derive_stream(21, 0, StreamRole::Test))));
  REQUIRE(cli({"fit", "--data", train.string(), "--test", test.string(), "--method", "scor,stepdown", "--out",
               out.string()})
              .code == kExitOk);
  std::ifstream in(out);
  const RunReport report = parse_run_report(in);
  CHECK(*report.solutions[0].test_ehum >= *report.solutions[1].test_ehum);
}

TEST_CASE("simulate is deterministic") {
  const fs::path a = scratch("sim_a.jsonl"), b = scratch("sim_b.jsonl");
  const std::vector<std::string> base{"simulate", "--scenario", "2", "--M", "3", "--d", "3", "--n", "6",
                                      "--reps", "4", "--seed", "8", "--methods", "scor,minmax"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"--out", a.string()});
  args_b.insert(args_b.end(), {"--out", b.string()});
  REQUIRE(cli(args_a).code == kExitOk);
  REQUIRE(cli(args_b).code == kExitOk);
  CHECK(slurp(a) == slurp(b));
  std::istringstream in(slurp(a));
  const SimulationReport r = parse_simulation_report(in);
  CHECK(r.cells.size() == 4);
  CHECK(r.config["n"] == std::vector<int>{6, 6, 6});
}

TEST_CASE("bench reaches the analytic optima") {
  const fs::path out = scratch("bench.jsonl");
  REQUIRE(cli({"bench", "--preset", "quadratic", "--d", "20", "--out", out.string()}).code == kExitOk);
  std::istringstream in(slurp(out));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["type"] != "bench") continue;
    ++rows;
    if (j["method"] == "scor" || j["method"] == "scor_serial") CHECK(j["gap"].get<double>() <= 1e-3);
  }
  CHECK(rows == 4);
  const Run lin = cli({"bench", "--preset", "linear", "--d", "100", "--methods", "scor"});
  CHECK(lin.code == kExitOk);
}

TEST_CASE("screen writes the kept columns") {
  const fs::path data = scratch("scr.csv"), out = scratch("scr_out.csv");
  write(data, "y,a,b,c\n0,1,1,0\n0,2,2,1\n1,3,3,0\n1,4,4,1\n");
  const Run r = cli({"screen", "--data", data.string(), "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(slurp(out).rfind("y,b,c\n", 0) == 0);
}

TEST_CASE("worker count from the environment") {
  ::setenv(kThreadsEnv, "0", 1);
  CHECK(cli({"bench", "--d", "3", "--methods", "scor"}).code == kExitUsage);
  ::setenv(kThreadsEnv, "2", 1);
  CHECK(cli({"bench", "--d", "3", "--methods", "scor"}).code == kExitOk);
  ::unsetenv(kThreadsEnv);
}
