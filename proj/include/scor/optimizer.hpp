#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "scor/unit_vector.hpp"

namespace scor {

/// Tuning parameters of the spherical pattern search.
struct ScorConfig {
  double s_initial = 1.0;   ///< step size at the start of every run
  double rho = 2.0;         ///< step decay rate, > 1
  double phi = 1e-6;        ///< a run ends once the step size is <= phi
  double lambda = 0.0;      ///< sparsity threshold; 0 disables zeroing
  double tol_fun = 1e-6;    ///< improvement below this shrinks the step
  double tol_fun_2 = 1e-12; ///< consecutive run solutions closer than this stop the search
  int max_iters = 5000;
  int max_runs = 500;
  bool parallel_eval = true; ///< evaluate candidates with OpenMP when the objective allows it
  bool keep_trace = true;

  void validate() const;
};

/// A black-box function on the unit sphere in R^dimension.
struct Objective {
  std::size_t dimension = 0;
  std::function<double(const UnitVector&)> evaluate;
  bool thread_safe = false;

  double operator()(const UnitVector& beta) const { return evaluate(beta); }
};

enum class Termination { ConsecutiveRunsConverged, MaxRunsReached };

const char* to_string(Termination t) noexcept;

struct IterationRecord {
  int run = 0;
  int iteration = 0;
  double step = 0.0;   ///< step size used for this iteration's candidates
  double value = 0.0;  ///< incumbent value after the iteration
};

struct ScorResult {
  UnitVector solution;
  double objective_value = 0.0;
  int runs_executed = 0;
  long total_iterations = 0;
  long evaluations = 0;
  Termination termination = Termination::MaxRunsReached;
  std::vector<IterationRecord> trace;
};

/// Minimizes `f` over the unit sphere starting from `beta0`.
///
/// Each run restarts at step size s_initial from the previous run's solution;
/// candidates are evaluated (possibly concurrently) and the strictly best one,
/// lowest candidate index on ties, replaces the incumbent. Candidates whose
/// value is NaN or infinite are never accepted. The result does not depend on
/// `parallel_eval`.
ScorResult scor_minimize(const Objective& f, const UnitVector& beta0, const ScorConfig& config = {});

/// Maximizes `f` by minimizing -f. Reported values (including the trace) are un-negated.
ScorResult scor_maximize(const Objective& f, const UnitVector& beta0, const ScorConfig& config = {});

/// scor_minimize from every start; the lowest value wins, earliest start on ties.
/// Per-start failures are swallowed unless every start fails.
ScorResult multistart(const Objective& f, std::span<const UnitVector> starts,
                      const ScorConfig& config = {});

}  // namespace scor
