#include "scor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>

#include "scor/errors.hpp"
#include "scor/sphere_geometry.hpp"

namespace scor {

void ScorConfig::validate() const {
  if (!(phi > 0.0)) throw InvalidConfig("phi must be > 0");
  if (!(s_initial > phi)) throw InvalidConfig("s_initial must exceed phi");
  if (!(rho > 1.0)) throw InvalidConfig("rho must be > 1");
  if (!(lambda >= 0.0)) throw InvalidConfig("lambda must be >= 0");
  if (!(tol_fun >= 0.0) || !(tol_fun_2 >= 0.0)) throw InvalidConfig("tolerances must be >= 0");
  if (max_iters < 1) throw InvalidConfig("max_iters must be >= 1");
  if (max_runs < 1) throw InvalidConfig("max_runs must be >= 1");
}

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::ConsecutiveRunsConverged:
      return "consecutive_runs_converged";
    case Termination::MaxRunsReached:
      return "max_runs_reached";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Values of every candidate, in candidate order. Non-finite values become +inf.
std::vector<double> evaluate_candidates(const Objective& f, const std::vector<CandidateMove>& cands,
                                        bool parallel) {
  const long n = static_cast<long>(cands.size());
  std::vector<double> values(cands.size(), kInf);
  std::vector<std::exception_ptr> errors(cands.size());
#pragma omp parallel for schedule(static) if (parallel && n > 1)
  for (long h = 0; h < n; ++h) {
    try {
      const double v = f(cands[h].point);
      values[h] = std::isfinite(v) ? v : kInf;
    } catch (...) {
      errors[h] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return values;
}

double evaluate_incumbent(const Objective& f, const UnitVector& beta) {
  const double v = f(beta);
  if (!std::isfinite(v)) throw NonFiniteObjective("objective is not finite at the incumbent");
  return v;
}

}  // namespace

ScorResult scor_minimize(const Objective& f, const UnitVector& beta0, const ScorConfig& config) {
  config.validate();
  if (!f.evaluate) throw InvalidConfig("objective has no evaluation function");
  if (f.dimension != beta0.dimension()) throw DimensionMismatch(f.dimension, beta0.dimension());

  const bool parallel = config.parallel_eval && f.thread_safe;
  UnitVector beta = beta0;
  double value = evaluate_incumbent(f, beta);
  long evaluations = 1;
  long total_iterations = 0;
  std::vector<IterationRecord> trace;
  UnitVector previous_run = beta0;
  Termination termination = Termination::MaxRunsReached;
  int runs = 0;

  for (int run = 1; run <= config.max_runs; ++run) {
    runs = run;
    double step = config.s_initial;
    int iter = 1;
    while (iter <= config.max_iters && step > config.phi) {
      const double step_used = step;
      auto cands = generate_candidates(beta, step, config.lambda, config.rho, config.phi);
      const auto values = evaluate_candidates(f, cands, parallel);
      evaluations += static_cast<long>(cands.size());

      std::size_t best = cands.size();
      double best_value = kInf;
      for (std::size_t h = 0; h < values.size(); ++h) {
        if (values[h] < best_value) {
          best_value = values[h];
          best = h;
        }
      }
      const double improvement = value - std::min(value, best_value);
      if (best < cands.size() && best_value < value) {
        beta = std::move(cands[best].point);
        value = best_value;
      }
      // The first iteration of a run never shrinks the step.
      if (iter > 1 && improvement < config.tol_fun && step > config.phi) step /= config.rho;

      if (config.keep_trace) trace.push_back({run, iter, step_used, value});
      ++iter;
    }
    total_iterations += iter - 1;
    if (distance(beta, previous_run) < config.tol_fun_2) {
      termination = Termination::ConsecutiveRunsConverged;
      break;
    }
    previous_run = beta;
  }

  return ScorResult{
      .solution = std::move(beta),
      .objective_value = value,
      .runs_executed = runs,
      .total_iterations = total_iterations,
      .evaluations = evaluations,
      .termination = termination,
      .trace = std::move(trace),
  };
}

ScorResult scor_maximize(const Objective& f, const UnitVector& beta0, const ScorConfig& config) {
  Objective negated{
      .dimension = f.dimension,
      .evaluate = [&f](const UnitVector& b) { return -f(b); },
      .thread_safe = f.thread_safe,
  };
  ScorResult r = scor_minimize(negated, beta0, config);
  r.objective_value = -r.objective_value;
  for (auto& rec : r.trace) rec.value = -rec.value;
  return r;
}

ScorResult multistart(const Objective& f, std::span<const UnitVector> starts,
                      const ScorConfig& config) {
  if (starts.empty()) throw InvalidConfig("multistart needs at least one start");
  config.validate();

  const long n = static_cast<long>(starts.size());
  std::vector<std::optional<ScorResult>> results(starts.size());
  std::vector<std::exception_ptr> errors(starts.size());
#pragma omp parallel for schedule(dynamic) if (config.parallel_eval && f.thread_safe && n > 1)
  for (long s = 0; s < n; ++s) {
    try {
      results[s] = scor_minimize(f, starts[s], config);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  }

  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < results.size(); ++s) {
    if (!results[s]) continue;
    if (!best || results[s]->objective_value < results[*best]->objective_value) best = s;
  }
  if (!best) std::rethrow_exception(errors.front());
  return std::move(*results[*best]);
}

}  // namespace scor
