#include <cmath>
#include <random>

#include <doctest.h>

#include "scor/errors.hpp"
#include "scor/objectives.hpp"

using namespace scor;

namespace {

ScoreSet set(std::vector<std::vector<double>> c) { return ScoreSet{std::move(c)}; }

// Scores drawn from a handful of levels so ties are common.
ScoreSet random_scores(std::mt19937_64& gen, std::size_t M, bool ties) {
  std::uniform_int_distribution<int> size(1, 12), level(0, 6);
  std::normal_distribution<double> n;
  ScoreSet s;
  s.classes.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    const int nj = size(gen);
    for (int r = 0; r < nj; ++r) s.classes[j].push_back(ties ? level(gen) + 0.3 * j : n(gen) + 0.4 * j);
  }
  return s;
}

}  // namespace

TEST_CASE("sample validation") {
  CHECK_THROWS_AS(MulticlassSample(2, {{1, 2}}), InvalidSpec);
  CHECK_THROWS_AS(MulticlassSample(2, {{1, 2}, {}}), EmptyClass);
  CHECK_THROWS_AS(MulticlassSample(2, {{1, 2}, {3}}), InvalidSpec);
  CHECK_THROWS_AS(MulticlassSample(0, {{}, {}}), InvalidSpec);
  CHECK_THROWS_AS(MulticlassSample(1, {{1}, {std::nan("")}}), NonFinite);
  const MulticlassSample s(2, {{1, 2, 3, 4}, {5, 6}});
  CHECK(s.class_sizes() == std::vector<std::size_t>{2, 1});
  CHECK(s.total_size() == 3);
  CHECK(s.row(0, 1)[0] == 3);
}

TEST_CASE("scores") {
  const MulticlassSample s(2, {{5, 9}, {2, 7}});
  const std::vector<double> e1{1, 0};
  const ScoreSet a = scores(e1, s);
  CHECK(a.classes[0] == std::vector<double>{5});
  CHECK(a.classes[1] == std::vector<double>{2});

  const MulticlassSample one(2, {{1, 1}, {0, 0}});
  const std::vector<double> b{0.6, 0.8};
  CHECK(scores(b, one).classes[0][0] == doctest::Approx(1.4));

  const double h = 1 / std::sqrt(2.0);
  const std::vector<double> p{h, h}, m{-h, -h};
  const ScoreSet sp = scores(p, s), sm = scores(m, s);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t r = 0; r < sp.classes[j].size(); ++r) CHECK(sp.classes[j][r] == -sm.classes[j][r]);

  const std::vector<double> wrong{1, 0, 0};
  CHECK_THROWS_AS(scores(wrong, s), DimensionMismatch);

  const MulticlassSample huge(2, {{1.5e308, 1.5e308}, {0, 0}});
  CHECK_THROWS_AS(scores(std::vector<double>{1, 1}, huge), NonFinite);
  const Objective f = make_objective(Criterion::Ehum, std::make_shared<const MulticlassSample>(huge));
  CHECK(std::isnan(f(UnitVector::uniform(2))));
}

TEST_CASE("EHUM examples") {
  CHECK(ehum(set({{0}, {1}, {2}})) == 1.0);
  CHECK(ehum(set({{1}, {0}, {2}})) == 0.0);
  CHECK(ehum(set({{1, 3}, {2, 4}})) == 0.75);
  CHECK(ehum_brute_force(set({{1, 3}, {2, 4}})) == 0.75);
  // ties score nothing
  CHECK(ehum(set({{1}, {1}, {2}})) == 0.0);
  CHECK_THROWS_AS(ehum(set({{1}, {}})), EmptyClass);
  CHECK_THROWS_AS(ehum(set({{1}})), InvalidSpec);
}

TEST_CASE("pairwise AUC examples") {
  const std::vector<double> a{0}, b{1}, c{1, 2}, lo{1, 3}, hi{2, 4}, empty;
  CHECK(pairwise_auc(a, b) == 1.0);
  CHECK(pairwise_auc(c, c) == 0.25);
  CHECK(pairwise_auc(lo, hi) == 0.75);
  CHECK_THROWS_AS(pairwise_auc(empty, b), EmptyClass);
}

TEST_CASE("ULBA examples") {
  const ScoreSet s = set({{1, 3}, {2, 4}, {5}});
  CHECK(ulba_pa(s) == 0.875);
  CHECK(ulba_pm(s) == 0.75);
  const ScoreSet sep = set({{0, 0.5}, {1, 1.2}, {3}});
  CHECK(ulba_pa(sep) == 1.0);
  CHECK(ulba_pm(sep) == 1.0);
  CHECK(ehum(sep) == 1.0);
}

TEST_CASE("efficient EHUM equals the brute-force count") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t M = 2 + trial % 3;
    const ScoreSet s = random_scores(gen, M, trial % 2 == 0);
    const OrderedCount fast = ehum_count(s), slow = ehum_count_brute_force(s);
    CHECK(fast.ordered == slow.ordered);
    CHECK(fast.total == slow.total);
  }
}

TEST_CASE("bound sandwich holds exactly") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t M = 2 + trial % 3;
    const ScoreSet s = random_scores(gen, M, trial % 3 == 0);
    const OrderedCount e = ehum_count_brute_force(s);
    // all ratios share the denominator N = prod n_j, so compare numerators in integers
    const __int128 N = e.total;
    __int128 lower = -static_cast<__int128>(M - 2) * N;
    for (std::size_t j = 0; j + 1 < M; ++j) {
      const OrderedCount a = pairwise_auc_count(s.classes[j], s.classes[j + 1]);
      const __int128 scale = N / a.total;
      CHECK(N % a.total == 0);
      lower += static_cast<__int128>(a.ordered) * scale;
      // upper bound: e / N <= a / T  <=>  e T <= a N
      CHECK(static_cast<__int128>(e.ordered) * a.total <= static_cast<__int128>(a.ordered) * N);
    }
    CHECK(static_cast<__int128>(e.ordered) >= lower);
    CHECK(static_cast<__int128>(e.ordered) >= 0);
    // and in floating point as reported
    CHECK(ehum(s) <= ulba_pm(s));
    CHECK(ehum(s) >= std::max(0.0, (M - 1.0) * ulba_pa(s) - (M - 2.0)) - 1e-12);
    CHECK(ehum(s) >= 0.0);
    CHECK(ehum(s) <= 1.0);
  }
}

TEST_CASE("two-class collapse and label reversal") {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    const ScoreSet s = random_scores(gen, 2, false);
    const double auc = pairwise_auc(s.classes[0], s.classes[1]);
    CHECK(ehum(s) == auc);
    CHECK(ulba_pa(s) == auc);
    CHECK(ulba_pm(s) == auc);
    CHECK(auc + pairwise_auc(s.classes[1], s.classes[0]) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("EHUM is unchanged by positive scaling of beta") {
  std::mt19937_64 gen(31);
  std::normal_distribution<double> n;
  std::vector<std::vector<double>> blocks(3);
  for (auto& b : blocks)
    for (int r = 0; r < 30; ++r) b.push_back(n(gen));
  const MulticlassSample s(3, blocks);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> beta{n(gen), n(gen), n(gen)}, scaled = beta;
    for (double& x : scaled) x *= 7.25;
    CHECK(ehum(beta, s) == ehum(scaled, s));
  }
}

TEST_CASE("Youden cut-points") {
  const CutPoints a = youden_cutpoints(set({{1, 2}, {3, 4}}));
  CHECK(a.thresholds == std::vector<double>{2.5});
  CHECK(a.youden_values == std::vector<double>{1.0});

  const CutPoints b = youden_cutpoints(set({{1, 3}, {2, 4}}));
  CHECK(b.thresholds == std::vector<double>{1.5});
  CHECK(b.youden_values == std::vector<double>{0.5});

  const CutPoints c = youden_cutpoints(set({{0}, {1}, {2}}));
  CHECK(c.thresholds == std::vector<double>{0.5, 1.5});
  CHECK(c.youden_values == std::vector<double>{1.0, 1.0});
  CHECK_FALSE(c.monotonicity_violated);
  CHECK(c.mean_youden() == 1.0);

  const CutPoints inverted = youden_cutpoints(set({{5}, {0}, {10}}));
  CHECK(inverted.thresholds == std::vector<double>{7.5, 7.5});
  CHECK(inverted.monotonicity_violated);

  CHECK_THROWS_AS(youden_cutpoints(set({{1, 1}, {1}})), DegenerateScores);
}

TEST_CASE("Youden values stay in range") {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 300; ++trial) {
    const ScoreSet s = random_scores(gen, 2 + trial % 3, trial % 2 == 0);
    try {
      const CutPoints c = youden_cutpoints(s);
      CHECK(c.thresholds.size() == s.num_classes() - 1);
      for (double y : c.youden_values) {
        CHECK(y >= -1.0);
        CHECK(y <= 1.0);
      }
    } catch (const DegenerateScores&) {
    }
  }
}

TEST_CASE("criteria") {
  CHECK(parse_criterion("ehum") == Criterion::Ehum);
  CHECK(parse_criterion("ulba") == Criterion::Ulba);
  CHECK_THROWS_AS(parse_criterion("hum"), InvalidConfig);
  CHECK(std::string(to_string(Criterion::Ulba)) == "ulba");
  const ScoreSet s = set({{1, 3}, {2, 4}, {5}});
  CHECK(criterion_value(Criterion::Ehum, s) == ehum(s));
  CHECK(criterion_value(Criterion::Ulba, s) == ulba_pa(s));
  CHECK(random_guess_hum(3) == doctest::Approx(1.0 / 6));
  CHECK(random_guess_hum(2) == 0.5);

  const auto sample = std::make_shared<const MulticlassSample>(2, std::vector<std::vector<double>>{{0, 1}, {1, 0}});
  const Objective f = make_objective(Criterion::Ehum, sample);
  CHECK(f.thread_safe);
  CHECK(f.dimension == 2);
  CHECK(f(UnitVector::axis(2, 0)) == 1.0);
}
