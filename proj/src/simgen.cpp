#include "scor/simgen.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "scor/errors.hpp"

namespace scor {

Scenario scenario_from_id(int id) {
  switch (id) {
    case 1:
      return Scenario::NormalIndependent;
    case 2:
      return Scenario::NormalAR;
    case 3:
      return Scenario::Weibull;
    default:
      throw InvalidSpec("scenario must be 1, 2 or 3, got " + std::to_string(id));
  }
}

void ScenarioSpec::validate() const {
  if (num_classes < 2) throw InvalidSpec("need at least two classes");
  if (dimension < 1) throw InvalidSpec("need at least one marker");
  if (n_per_class.size() != num_classes) {
    throw InvalidSpec("n_per_class has " + std::to_string(n_per_class.size()) +
                      " entries for " + std::to_string(num_classes) + " classes");
  }
  for (std::size_t n : n_per_class) {
    if (n < 1) throw InvalidSpec("every class needs at least one subject");
  }
  if (!std::isfinite(effect_scale)) throw InvalidSpec("effect_scale must be finite");
}

double normal_scenario_mean(std::size_t class_index, std::size_t marker) {
  const double sign = marker % 2 == 0 ? 1.0 : -1.0;
  return sign * static_cast<double>(class_index) * (1.0 + 0.1 * static_cast<double>(marker - 1));
}

WeibullParams weibull_scenario_params(std::size_t class_index, std::size_t marker) {
  return WeibullParams{
      .scale = static_cast<double>(class_index + 1),
      .shape = 0.5 * static_cast<double>(marker),
      .location = std::pow(-5.0, static_cast<double>(marker)),
  };
}

StreamKey derive_stream(std::uint64_t seed, std::uint32_t replication, StreamRole role) noexcept {
  return StreamKey{seed, replication, static_cast<std::uint32_t>(role)};
}

MulticlassSample generate(const ScenarioSpec& spec) {
  return generate(spec, derive_stream(spec.seed, 0, StreamRole::Train));
}

MulticlassSample generate(const ScenarioSpec& spec, StreamKey stream) {
  spec.validate();
  const std::size_t d = spec.dimension;
  PhiloxEngine rng(stream);

  Eigen::MatrixXd chol;
  if (spec.scenario == Scenario::NormalAR) {
    Eigen::MatrixXd sigma(d, d);
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        sigma(s, t) = std::pow(0.5, std::abs(static_cast<double>(s) - static_cast<double>(t)));
      }
    }
    chol = Eigen::LLT<Eigen::MatrixXd>(sigma).matrixL();
  }

  std::vector<std::vector<double>> blocks(spec.num_classes);
  Eigen::VectorXd z(d);
  for (std::size_t i = 0; i < spec.num_classes; ++i) {
    auto& block = blocks[i];
    block.resize(spec.n_per_class[i] * d);
    for (std::size_t r = 0; r < spec.n_per_class[i]; ++r) {
      double* row = block.data() + r * d;
      switch (spec.scenario) {
        case Scenario::NormalIndependent:
          for (std::size_t j = 0; j < d; ++j) {
            row[j] = spec.effect_scale * normal_scenario_mean(i, j + 1) + rng.normal();
          }
          break;
        case Scenario::NormalAR: {
          for (std::size_t j = 0; j < d; ++j) z(j) = rng.normal();
          const Eigen::VectorXd x = chol * z;
          for (std::size_t j = 0; j < d; ++j) {
            row[j] = spec.effect_scale * normal_scenario_mean(i, j + 1) + x(j);
          }
          break;
        }
        case Scenario::Weibull:
          for (std::size_t j = 0; j < d; ++j) {
            const WeibullParams p = weibull_scenario_params(i, j + 1);
            // Inverse CDF of the standard Weibull, then location-scale.
            const double w = std::pow(-std::log(rng.uniform_open()), 1.0 / p.shape);
            row[j] = p.location + p.scale * w;
          }
          break;
      }
    }
  }
  return MulticlassSample(d, std::move(blocks));
}

}  // namespace scor
