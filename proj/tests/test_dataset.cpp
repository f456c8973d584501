#include <sstream>

#include <doctest.h>

#include "scor/dataset.hpp"
#include "scor/errors.hpp"
#include "scor/simgen.hpp"

using namespace scor;

namespace {

DatasetFile parse(const std::string& text, const LabelMap& merge = {}) {
  std::istringstream in(text);
  return parse_dataset(in, "t.csv", merge);
}

}  // namespace

TEST_CASE("parse a small table") {
  const DatasetFile f = parse("grade,a,b\n1,0.5,2\n0,1e-3,-4\n1,3,4\r\n");
  CHECK(f.label_name == "grade");
  CHECK(f.column_names == std::vector<std::string>{"a", "b"});
  CHECK(f.sample.class_sizes() == std::vector<std::size_t>{1, 2});
  CHECK(f.sample.row(0, 0)[0] == 1e-3);
  CHECK(f.sample.row(1, 1)[1] == 4.0);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("y,a,b\n0,1,2\n1,2,oops\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.row() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("y\n0\n"), ParseError);
  CHECK_THROWS_AS(parse("y,a\n0,1,2\n"), ParseError);
  CHECK_THROWS_AS(parse("y,a\nx,1\n"), ParseError);
  CHECK_THROWS_AS(parse("y,a\n-1,1\n"), ParseError);
  CHECK_THROWS_AS(parse("y,a\n0,nan\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse("y,a\n"), ParseError);
}

TEST_CASE("class labels must be contiguous") {
  CHECK_THROWS_AS(parse("y,a\n0,1\n2,3\n"), ClassGap);
  CHECK_THROWS_AS(parse("y,a\n0,1\n0,3\n"), ClassGap);
  const DatasetFile merged = parse("y,a\n0,1\n3,3\n1,2\n4,5\n", parse_label_map("3:2,4:2"));
  CHECK(merged.sample.class_sizes() == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("label map syntax") {
  CHECK(parse_label_map("").empty());
  CHECK(parse_label_map("3:2, 4:2") == LabelMap{{3, 2}, {4, 2}});
  CHECK_THROWS_AS(parse_label_map("3-2"), InvalidConfig);
  CHECK_THROWS_AS(parse_label_map("a:b"), InvalidConfig);
}

TEST_CASE("CSV round trip is value-identical") {
  const ScenarioSpec spec{.scenario = Scenario::Weibull, .num_classes = 3, .dimension = 4, .n_per_class = {5, 6, 7}, .seed = 3};
  const DatasetFile a = make_dataset(generate(spec));
  std::ostringstream out;
  write_dataset(out, a);
  const DatasetFile b = parse(out.str());
  CHECK(b.sample == a.sample);
  CHECK(b.column_names == a.column_names);
  std::ostringstream again;
  write_dataset(again, b);
  CHECK(again.str() == out.str());
}

TEST_CASE("constant columns and correlation screening") {
  const DatasetFile f = parse("y,a,b,c,k\n0,1,2,5,7\n0,2,4,1,7\n1,3,6,4,7\n1,4,8.5,2,7\n");
  CHECK(constant_columns(f.sample) == std::vector<std::size_t>{3});
  const auto r = correlation_matrix(f.sample);
  CHECK(r[0][0] == doctest::Approx(1.0));
  CHECK(r[0][1] > 0.99);
  const ScreenResult s = screen_correlated(f.sample, 0.8);
  // a and b are nearly collinear; b has the larger mean |r| to the rest
  CHECK(s.removed.size() == 1);
  for (std::size_t k = 0; k + 1 < s.kept.size(); ++k) CHECK(s.kept[k] < s.kept[k + 1]);
  const DatasetFile kept = select_columns(f, s.kept);
  CHECK(kept.sample.dimension() == s.kept.size());
  CHECK_THROWS_AS(screen_correlated(f.sample, 0.0), InvalidConfig);
  CHECK_THROWS_AS(select_columns(f, {}), InvalidConfig);
}

TEST_CASE("screen ties go to the first column") {
  // a and b are identical, c is unrelated
  const DatasetFile f = parse("y,a,b,c\n0,1,1,0\n0,2,2,1\n1,3,3,0\n1,4,4,1\n");
  const ScreenResult s = screen_correlated(f.sample, 0.8);
  CHECK(s.removed == std::vector<std::size_t>{0});
  CHECK(s.kept == std::vector<std::size_t>{1, 2});
}

TEST_CASE("missing file") { CHECK_THROWS_AS(read_dataset("/nonexistent/x.csv"), InvalidConfig); }
