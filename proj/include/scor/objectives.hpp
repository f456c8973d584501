#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "scor/optimizer.hpp"
#include "scor/unit_vector.hpp"

namespace scor {

/// M ordered outcome classes; class j holds an n_j x d row-major block of marker values.
class MulticlassSample {
 public:
  /// `blocks[j]` is class j's data, row-major with `d` columns.
  MulticlassSample(std::size_t d, std::vector<std::vector<double>> blocks);

  std::size_t dimension() const noexcept { return d_; }
  std::size_t num_classes() const noexcept { return blocks_.size(); }
  std::size_t class_size(std::size_t j) const { return blocks_.at(j).size() / d_; }
  std::size_t total_size() const noexcept;
  std::vector<std::size_t> class_sizes() const;

  std::span<const double> row(std::size_t j, std::size_t r) const {
    return std::span<const double>(blocks_[j]).subspan(r * d_, d_);
  }
  std::span<const double> block(std::size_t j) const { return blocks_.at(j); }

  friend bool operator==(const MulticlassSample&, const MulticlassSample&) = default;

 private:
  std::size_t d_;
  std::vector<std::vector<double>> blocks_;
};

/// Per-class combination scores beta'x, in class order. Throws NonFinite when a score overflows.
struct ScoreSet {
  std::vector<std::vector<double>> classes;

  std::size_t num_classes() const noexcept { return classes.size(); }
};

/// Numerator and denominator of an empirical ordering probability.
struct OrderedCount {
  std::uint64_t ordered = 0;
  std::uint64_t total = 0;

  double ratio() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(ordered) / static_cast<double>(total);
  }
};

ScoreSet scores(std::span<const double> beta, const MulticlassSample& sample);

/// Number of cross-class M-tuples whose scores strictly increase with class index.
/// Sorted sweep, O(n log n + n M).
OrderedCount ehum_count(const ScoreSet& s);

/// Same count by enumerating every M-tuple; the serial reference for ehum_count.
OrderedCount ehum_count_brute_force(const ScoreSet& s);

double ehum(const ScoreSet& s);
double ehum(std::span<const double> beta, const MulticlassSample& sample);
double ehum_brute_force(const ScoreSet& s);

/// Pairs (lo, hi) with hi > lo strictly.
OrderedCount pairwise_auc_count(std::span<const double> lo, std::span<const double> hi);
double pairwise_auc(std::span<const double> lo, std::span<const double> hi);

/// Mean of the M-1 adjacent pairwise AUCs.
double ulba_pa(const ScoreSet& s);
double ulba_pa(std::span<const double> beta, const MulticlassSample& sample);
/// Minimum of the M-1 adjacent pairwise AUCs.
double ulba_pm(const ScoreSet& s);
double ulba_pm(std::span<const double> beta, const MulticlassSample& sample);

struct CutPoints {
  std::vector<double> thresholds;      ///< M-1 boundaries, not forced to be monotone
  std::vector<double> youden_values;   ///< sensitivity + specificity - 1 at each threshold
  bool monotonicity_violated = false;  ///< set when consecutive thresholds do not increase

  double mean_youden() const noexcept;
};

/// Youden-optimal threshold at each adjacent boundary j | j+1, pooling classes <= j
/// as negatives. Candidates are midpoints of consecutive distinct pooled scores;
/// ties go to the smallest threshold. Throws DegenerateScores when a boundary has a
/// single distinct value.
CutPoints youden_cutpoints(const ScoreSet& s);

/// Which ranking criterion a combination vector is fitted to.
enum class Criterion { Ehum, Ulba };

const char* to_string(Criterion c) noexcept;
Criterion parse_criterion(std::string_view name);

double criterion_value(Criterion c, const ScoreSet& s);
double criterion_value(Criterion c, std::span<const double> beta, const MulticlassSample& sample);

/// Wraps a criterion on a shared sample as a thread-safe Objective (to maximize).
/// Overflowing scores evaluate to NaN.
Objective make_objective(Criterion c, std::shared_ptr<const MulticlassSample> sample);

/// 1/M!, the expected HUM of a random ordering.
double random_guess_hum(std::size_t num_classes);

}  // namespace scor
