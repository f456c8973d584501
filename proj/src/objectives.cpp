#include "scor/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "scor/errors.hpp"

namespace scor {

MulticlassSample::MulticlassSample(std::size_t d, std::vector<std::vector<double>> blocks)
    : d_(d), blocks_(std::move(blocks)) {
  if (d_ == 0) throw InvalidSpec("sample needs at least one marker column");
  if (blocks_.size() < 2) throw InvalidSpec("sample needs at least two classes");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    if (b.empty()) throw EmptyClass("class " + std::to_string(j) + " is empty");
    if (b.size() % d_ != 0) {
      throw InvalidSpec("class " + std::to_string(j) + " block is not a multiple of d");
    }
    for (double x : b) {
      if (!std::isfinite(x)) throw NonFinite("class " + std::to_string(j) + " has a non-finite entry");
    }
  }
}

std::size_t MulticlassSample::total_size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size() / d_;
  return n;
}

std::vector<std::size_t> MulticlassSample::class_sizes() const {
  std::vector<std::size_t> n;
  n.reserve(blocks_.size());
  for (const auto& b : blocks_) n.push_back(b.size() / d_);
  return n;
}

ScoreSet scores(std::span<const double> beta, const MulticlassSample& sample) {
  if (beta.size() != sample.dimension()) throw DimensionMismatch(sample.dimension(), beta.size());
  const std::size_t d = sample.dimension();
  ScoreSet out;
  out.classes.resize(sample.num_classes());
  for (std::size_t j = 0; j < sample.num_classes(); ++j) {
    const auto block = sample.block(j);
    auto& s = out.classes[j];
    s.resize(block.size() / d);
    for (std::size_t r = 0; r < s.size(); ++r) {
      const double* x = block.data() + r * d;
      double acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += beta[k] * x[k];
      if (!std::isfinite(acc)) throw NonFinite("combination score overflows for class " + std::to_string(j));
      s[r] = acc;
    }
  }
  return out;
}

namespace {

std::uint64_t tuple_total(const ScoreSet& s) {
  std::uint64_t total = 1;
  for (const auto& c : s.classes) {
    if (c.empty()) throw EmptyClass("score class is empty");
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(c.size()), &total)) {
      throw InvalidSpec("too many cross-class tuples for exact counting");
    }
  }
  return total;
}

void require_classes(const ScoreSet& s) {
  if (s.num_classes() < 2) throw InvalidSpec("need at least two classes");
}

}  // namespace

OrderedCount ehum_count(const ScoreSet& s) {
  require_classes(s);
  const std::size_t m = s.num_classes();
  OrderedCount result{0, tuple_total(s)};

  std::vector<std::pair<double, std::size_t>> pooled;
  for (std::size_t j = 0; j < m; ++j) {
    for (double v : s.classes[j]) pooled.emplace_back(v, j);
  }
  std::sort(pooled.begin(), pooled.end());

  // chains[j]: strictly increasing chains through classes 0..j ending below the current value.
  std::vector<std::uint64_t> chains(m, 0);
  std::vector<std::uint64_t> pending(m, 0);
  std::size_t g = 0;
  while (g < pooled.size()) {
    std::size_t end = g;
    while (end < pooled.size() && pooled[end].first == pooled[g].first) ++end;
    std::fill(pending.begin(), pending.end(), 0);
    for (std::size_t k = g; k < end; ++k) {
      const std::size_t j = pooled[k].second;
      pending[j] += j == 0 ? 1 : chains[j - 1];
    }
    for (std::size_t j = 0; j < m; ++j) chains[j] += pending[j];
    g = end;
  }
  result.ordered = chains[m - 1];
  return result;
}

OrderedCount ehum_count_brute_force(const ScoreSet& s) {
  require_classes(s);
  const std::size_t m = s.num_classes();
  OrderedCount result{0, tuple_total(s)};
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    bool ordered = true;
    for (std::size_t j = 0; j + 1 < m && ordered; ++j) {
      ordered = s.classes[j + 1][idx[j + 1]] > s.classes[j][idx[j]];
    }
    if (ordered) ++result.ordered;
    // Odometer increment over the product of class indices.
    std::size_t j = 0;
    while (j < m && ++idx[j] == s.classes[j].size()) {
      idx[j] = 0;
      ++j;
    }
    if (j == m) break;
  }
  return result;
}

double ehum(const ScoreSet& s) { return ehum_count(s).ratio(); }

double ehum(std::span<const double> beta, const MulticlassSample& sample) {
  return ehum(scores(beta, sample));
}

double ehum_brute_force(const ScoreSet& s) { return ehum_count_brute_force(s).ratio(); }

OrderedCount pairwise_auc_count(std::span<const double> lo, std::span<const double> hi) {
  if (lo.empty() || hi.empty()) throw EmptyClass("pairwise AUC needs two non-empty score lists");
  std::vector<double> a(lo.begin(), lo.end());
  std::vector<double> b(hi.begin(), hi.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  OrderedCount c{0, static_cast<std::uint64_t>(a.size()) * b.size()};
  std::size_t below = 0;  // entries of `a` strictly below the current hi value
  for (double v : b) {
    while (below < a.size() && a[below] < v) ++below;
    c.ordered += below;
  }
  return c;
}

double pairwise_auc(std::span<const double> lo, std::span<const double> hi) {
  return pairwise_auc_count(lo, hi).ratio();
}

namespace {

std::vector<double> adjacent_aucs(const ScoreSet& s) {
  require_classes(s);
  std::vector<double> out;
  for (std::size_t j = 0; j + 1 < s.num_classes(); ++j) {
    out.push_back(pairwise_auc(s.classes[j], s.classes[j + 1]));
  }
  return out;
}

}  // namespace

double ulba_pa(const ScoreSet& s) {
  const auto aucs = adjacent_aucs(s);
  return std::accumulate(aucs.begin(), aucs.end(), 0.0) / static_cast<double>(aucs.size());
}

double ulba_pa(std::span<const double> beta, const MulticlassSample& sample) {
  return ulba_pa(scores(beta, sample));
}

double ulba_pm(const ScoreSet& s) {
  const auto aucs = adjacent_aucs(s);
  return *std::min_element(aucs.begin(), aucs.end());
}

double ulba_pm(std::span<const double> beta, const MulticlassSample& sample) {
  return ulba_pm(scores(beta, sample));
}

double CutPoints::mean_youden() const noexcept {
  if (youden_values.empty()) return 0.0;
  return std::accumulate(youden_values.begin(), youden_values.end(), 0.0) /
         static_cast<double>(youden_values.size());
}

CutPoints youden_cutpoints(const ScoreSet& s) {
  require_classes(s);
  CutPoints out;
  const std::size_t m = s.num_classes();
  for (std::size_t boundary = 0; boundary + 1 < m; ++boundary) {
    std::vector<double> neg;
    std::vector<double> pos;
    for (std::size_t j = 0; j < m; ++j) {
      auto& dst = j <= boundary ? neg : pos;
      dst.insert(dst.end(), s.classes[j].begin(), s.classes[j].end());
    }
    if (neg.empty() || pos.empty()) throw EmptyClass("boundary has an empty side");
    std::sort(neg.begin(), neg.end());
    std::sort(pos.begin(), pos.end());

    std::vector<double> distinct(neg);
    distinct.insert(distinct.end(), pos.begin(), pos.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) {
      throw DegenerateScores("all scores are identical at boundary " + std::to_string(boundary));
    }

    const auto n_neg = static_cast<std::int64_t>(neg.size());
    const auto n_pos = static_cast<std::int64_t>(pos.size());
    // Youden * n_pos * n_neg = tp * n_neg - fp * n_pos, compared exactly in integers.
    std::int64_t best_scaled = 0;
    double best_threshold = 0.0;
    bool have = false;
    for (std::size_t k = 0; k + 1 < distinct.size(); ++k) {
      const double c = distinct[k] + (distinct[k + 1] - distinct[k]) / 2.0;
      const auto tp = static_cast<std::int64_t>(pos.end() - std::upper_bound(pos.begin(), pos.end(), c));
      const auto fp = static_cast<std::int64_t>(neg.end() - std::upper_bound(neg.begin(), neg.end(), c));
      const std::int64_t scaled = tp * n_neg - fp * n_pos;
      if (!have || scaled > best_scaled) {
        best_scaled = scaled;
        best_threshold = c;
        have = true;
      }
    }
    out.thresholds.push_back(best_threshold);
    out.youden_values.push_back(static_cast<double>(best_scaled) /
                                static_cast<double>(n_pos * n_neg));
  }
  for (std::size_t k = 0; k + 1 < out.thresholds.size(); ++k) {
    if (!(out.thresholds[k] < out.thresholds[k + 1])) out.monotonicity_violated = true;
  }
  return out;
}

const char* to_string(Criterion c) noexcept {
  return c == Criterion::Ehum ? "ehum" : "ulba";
}

Criterion parse_criterion(std::string_view name) {
  if (name == "ehum") return Criterion::Ehum;
  if (name == "ulba") return Criterion::Ulba;
  throw InvalidConfig("unknown objective '" + std::string(name) + "' (expected ehum or ulba)");
}

double criterion_value(Criterion c, const ScoreSet& s) {
  return c == Criterion::Ehum ? ehum(s) : ulba_pa(s);
}

double criterion_value(Criterion c, std::span<const double> beta, const MulticlassSample& sample) {
  return criterion_value(c, scores(beta, sample));
}

Objective make_objective(Criterion c, std::shared_ptr<const MulticlassSample> sample) {
  const std::size_t d = sample->dimension();
  return Objective{
      .dimension = d,
      .evaluate = [c, sample = std::move(sample)](const UnitVector& beta) {
        try {
          return criterion_value(c, beta.coords(), *sample);
        } catch (const NonFinite&) {
          return std::numeric_limits<double>::quiet_NaN();
        }
      },
      .thread_safe = true,
  };
}

double random_guess_hum(std::size_t num_classes) {
  double factorial = 1.0;
  for (std::size_t k = 2; k <= num_classes; ++k) factorial *= static_cast<double>(k);
  return 1.0 / factorial;
}

}  // namespace scor
