#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "scor/objectives.hpp"
#include "scor/optimizer.hpp"
#include "scor/simgen.hpp"

namespace scor {

/// Estimators of the combining vector compared by the harness.
enum class Method { Scor, NelderMead, StepDown, MinMax };

const char* to_string(Method m) noexcept;
Method parse_method(std::string_view name);
inline constexpr Method kAllMethods[] = {Method::Scor, Method::NelderMead, Method::StepDown,
                                         Method::MinMax};

/// A fitted combining vector and how to apply it to new data.
struct FittedCombiner {
  Method method;
  Criterion criterion;
  UnitVector coefficients;
  double train_value = 0.0;     ///< criterion on the training sample
  bool min_max_reduced = false; ///< coefficients act on (max, min) features
  std::size_t evaluations = 0;
};

/// Fits `method` to `train`. SCOR starts from the symmetric point 1/sqrt(d).
FittedCombiner fit_method(Method method, Criterion criterion, const MulticlassSample& train,
                          const ScorConfig& config = {});

/// Per-class scores of the combiner on `sample`, applying the min-max reduction if needed.
ScoreSet combiner_scores(const FittedCombiner& fit, const MulticlassSample& sample);

/// Empirical HUM of the combiner on `sample`.
double evaluate_ehum(const FittedCombiner& fit, const MulticlassSample& sample);

struct ReplicationReport {
  Method method;
  Criterion criterion;
  double mean_test_ehum = 0.0;
  double sd_test_ehum = 0.0;  ///< per-replication standard deviation (n - 1 denominator)
  double se_test_ehum = 0.0;  ///< sd / sqrt(replications)
  std::size_t replications = 0;
  std::vector<double> values;
};

/// Mean, sd and se of per-replication values.
ReplicationReport summarize(Method method, Criterion criterion, std::vector<double> values);

/// For each replication r, draws train and test samples of `spec` on streams
/// (seed, r, Train) and (seed, r, Test), fits every (method, criterion) pair on train
/// and records its test-set EHUM. Replications run concurrently under OpenMP;
/// the result is independent of the worker count. Reports are ordered by method
/// then criterion.
std::vector<ReplicationReport> replicate_experiment(const ScenarioSpec& spec,
                                                    std::span<const Method> methods,
                                                    std::span<const Criterion> criteria,
                                                    std::size_t replications, std::uint64_t seed,
                                                    const ScorConfig& config = {});

}  // namespace scor
