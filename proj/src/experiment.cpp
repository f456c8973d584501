#include "scor/experiment.hpp"

#include <cmath>
#include <exception>
#include <memory>
#include <numeric>
#include <string>

#include "scor/baselines.hpp"
#include "scor/errors.hpp"

namespace scor {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Scor:
      return "scor";
    case Method::NelderMead:
      return "nm";
    case Method::StepDown:
      return "stepdown";
    case Method::MinMax:
      return "minmax";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (name == to_string(m)) return m;
  }
  throw InvalidConfig("unknown method '" + std::string(name) + "'");
}

FittedCombiner fit_method(Method method, Criterion criterion, const MulticlassSample& train,
                          const ScorConfig& config) {
  if (method == Method::Scor) {
    auto shared = std::make_shared<const MulticlassSample>(train);
    const Objective f = make_objective(criterion, shared);
    ScorConfig c = config;
    c.keep_trace = false;
    ScorResult r = scor_maximize(f, UnitVector::uniform(train.dimension()), c);
    return FittedCombiner{
        .method = method,
        .criterion = criterion,
        .coefficients = std::move(r.solution),
        .train_value = r.objective_value,
        .evaluations = static_cast<std::size_t>(r.evaluations),
    };
  }
  BaselineResult b = [&] {
    switch (method) {
      case Method::NelderMead:
        return nelder_mead_estimate(criterion, train);
      case Method::StepDown:
        return step_down_estimate(criterion, train);
      case Method::MinMax:
      case Method::Scor:
        break;
    }
    return min_max_estimate(criterion, train);
  }();
  return FittedCombiner{
      .method = method,
      .criterion = criterion,
      .coefficients = std::move(b.solution),
      .train_value = b.objective_value,
      .min_max_reduced = b.min_max_reduced,
      .evaluations = b.evaluations,
  };
}

ScoreSet combiner_scores(const FittedCombiner& fit, const MulticlassSample& sample) {
  if (fit.min_max_reduced) return scores(fit.coefficients.coords(), min_max_reduce(sample));
  return scores(fit.coefficients.coords(), sample);
}

double evaluate_ehum(const FittedCombiner& fit, const MulticlassSample& sample) {
  return ehum(combiner_scores(fit, sample));
}

ReplicationReport summarize(Method method, Criterion criterion, std::vector<double> values) {
  ReplicationReport rep{.method = method, .criterion = criterion};
  rep.replications = values.size();
  if (!values.empty()) {
    const double n = static_cast<double>(values.size());
    rep.mean_test_ehum = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - rep.mean_test_ehum) * (v - rep.mean_test_ehum);
      rep.sd_test_ehum = std::sqrt(ss / (n - 1.0));
    }
    rep.se_test_ehum = rep.sd_test_ehum / std::sqrt(n);
  }
  rep.values = std::move(values);
  return rep;
}

std::vector<ReplicationReport> replicate_experiment(const ScenarioSpec& spec,
                                                    std::span<const Method> methods,
                                                    std::span<const Criterion> criteria,
                                                    std::size_t replications, std::uint64_t seed,
                                                    const ScorConfig& config) {
  spec.validate();
  config.validate();
  if (replications < 1) throw InvalidConfig("replications must be >= 1");
  if (methods.empty() || criteria.empty()) throw InvalidConfig("need at least one method and objective");

  const std::size_t cells = methods.size() * criteria.size();
  // values[cell][r]
  std::vector<std::vector<double>> values(cells, std::vector<double>(replications, 0.0));
  std::vector<std::exception_ptr> errors(replications);
  ScorConfig inner = config;
  inner.parallel_eval = false;

  const long reps = static_cast<long>(replications);
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < reps; ++r) {
    try {
      const auto rep = static_cast<std::uint32_t>(r);
      const MulticlassSample train = generate(spec, derive_stream(seed, rep, StreamRole::Train));
      const MulticlassSample test = generate(spec, derive_stream(seed, rep, StreamRole::Test));
      std::size_t cell = 0;
      for (Method m : methods) {
        for (Criterion c : criteria) {
          values[cell++][r] = evaluate_ehum(fit_method(m, c, train, inner), test);
        }
      }
    } catch (...) {
      errors[r] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<ReplicationReport> out;
  std::size_t cell = 0;
  for (Method m : methods) {
    for (Criterion c : criteria) out.push_back(summarize(m, c, std::move(values[cell++])));
  }
  return out;
}

}  // namespace scor
