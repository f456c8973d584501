#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "scor/objectives.hpp"
#include "scor/random.hpp"

namespace scor {

enum class Scenario {
  NormalIndependent = 1,  ///< N(mu_i, I)
  NormalAR = 2,           ///< N(mu_i, Sigma), Sigma_st = 0.5^|s-t|
  Weibull = 3,            ///< independent three-parameter Weibull markers
};

Scenario scenario_from_id(int id);

struct ScenarioSpec {
  Scenario scenario = Scenario::NormalIndependent;
  std::size_t num_classes = 2;
  std::size_t dimension = 5;
  std::vector<std::size_t> n_per_class{15, 15};
  std::uint64_t seed = 0;
  /// Multiplies the normal-scenario class means; 0 makes every class identically distributed.
  double effect_scale = 1.0;

  void validate() const;
};

/// mu_ij = (-1)^j * i * (1 + 0.1 (j - 1)) for class i >= 0 and marker j >= 1.
double normal_scenario_mean(std::size_t class_index, std::size_t marker);

struct WeibullParams {
  double scale;     ///< lambda_i = i + 1
  double shape;     ///< k_j = 0.5 j
  double location;  ///< gamma_j = (-5)^j
};

WeibullParams weibull_scenario_params(std::size_t class_index, std::size_t marker);

enum class StreamRole : std::uint32_t { Train = 0, Test = 1 };

/// Stream for (seed, replication, role); distinct roles and replications never share draws.
StreamKey derive_stream(std::uint64_t seed, std::uint32_t replication, StreamRole role) noexcept;

/// Draws a sample from `spec` on the stream (spec.seed, 0, Train).
MulticlassSample generate(const ScenarioSpec& spec);
MulticlassSample generate(const ScenarioSpec& spec, StreamKey stream);

}  // namespace scor
