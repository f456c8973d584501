#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scor/optimizer.hpp"

namespace scor {

/// f(beta) = beta_index; minimum -1 at -e_index.
Objective linear_objective(std::size_t d, std::size_t index = 0);

/// f(beta) = -sum_k beta_k; minimum -sqrt(d) at beta = 1/sqrt(d).
Objective symmetric_objective(std::size_t d);

/// f(beta) = sum_k diag_k beta_k^2; minimum min(diag).
Objective diagonal_quadratic_objective(std::vector<double> diag);

/// A built-in analytic objective with its known minimum.
struct Preset {
  std::string name;
  Objective objective;
  double optimum;
};

/// "linear", "symmetric", or "quadratic" (diag(d, d-1, ..., 1)).
Preset make_preset(std::string_view name, std::size_t d);

struct RandomSearchResult {
  UnitVector solution;
  double value;
  std::size_t evaluations;
};

/// Best of `budget` directions drawn uniformly on the sphere, plus `start`.
RandomSearchResult random_search_minimize(const Objective& f, const UnitVector& start,
                                          std::size_t budget, std::uint64_t seed);

}  // namespace scor
