#include <sstream>

#include <doctest.h>

#include "scor/errors.hpp"
#include "scor/report.hpp"

using namespace scor;

TEST_CASE("run report round trip") {
  RunReport r;
  r.config = {{"objective", "ehum"}, {"seed", 4}};
  r.class_sizes = {3, 4, 5};
  r.random_guess = 1.0 / 6;
  SolutionRecord a{.method = "scor",
                   .objective = "ehum",
                   .names = {"x1", "x2"},
                   .coefficients = {0.6, -0.8},
                   .ehum = 0.1 + 0.2,
                   .ulba_pa = 0.9,
                   .ulba_pm = 0.85,
                   .test_ehum = 0.7,
                   .cutpoints = CutPoints{{0.25, 1.0 / 3}, {0.5, 0.75}, false},
                   .evaluations = 1234,
                   .seconds = 0.125};
  SolutionRecord b{.method = "minmax", .objective = "ehum", .names = {"max", "min"}, .coefficients = {1, 0},
                   .min_max_reduced = true, .ehum = 0.5, .ulba_pa = 0.5, .ulba_pm = 0.5, .evaluations = 9};
  r.solutions = {a, b};
  r.best_method = "scor";
  const std::string text = to_jsonl(r);
  std::istringstream in(text);
  const RunReport back = parse_run_report(in);
  CHECK(back == r);

  // without timings the seconds are lost, everything else survives
  std::istringstream in2(to_jsonl(r, false));
  RunReport no_time = parse_run_report(in2);
  CHECK(no_time.solutions[0].seconds == 0.0);
  no_time.solutions[0].seconds = 0.125;
  CHECK(no_time == r);

  CHECK(canonical_report(text) == to_jsonl(r, false));
  CHECK(text.find("philox4x32-10") != std::string::npos);
}

TEST_CASE("simulation report round trip") {
  SimulationReport s;
  s.config = {{"scenario", 1}};
  s.cells = {summarize(Method::Scor, Criterion::Ehum, {0.9, 0.95}),
             summarize(Method::MinMax, Criterion::Ulba, {0.5, 0.1, 0.3})};
  const std::string text = to_jsonl(s);
  std::istringstream in(text);
  const SimulationReport back = parse_simulation_report(in);
  CHECK(back.config == s.config);
  REQUIRE(back.cells.size() == 2);
  CHECK(back.cells[1].method == Method::MinMax);
  CHECK(back.cells[1].values == s.cells[1].values);
  CHECK(back.cells[0].mean_test_ehum == s.cells[0].mean_test_ehum);
  CHECK(to_jsonl(back) == text);
}

TEST_CASE("malformed reports") {
  std::istringstream in("{\"type\":\"header\"\n");
  CHECK_THROWS_AS(parse_run_report(in), ParseError);
}
