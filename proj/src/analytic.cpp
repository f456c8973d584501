#include "scor/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "scor/errors.hpp"
#include "scor/random.hpp"

namespace scor {

Objective linear_objective(std::size_t d, std::size_t index) {
  if (index >= d) throw InvalidConfig("linear objective index out of range");
  return Objective{
      .dimension = d,
      .evaluate = [index](const UnitVector& b) { return b[index]; },
      .thread_safe = true,
  };
}

Objective symmetric_objective(std::size_t d) {
  return Objective{
      .dimension = d,
      .evaluate =
          [](const UnitVector& b) {
            double s = 0.0;
            for (double x : b.coords()) s += x;
            return -s;
          },
      .thread_safe = true,
  };
}

Objective diagonal_quadratic_objective(std::vector<double> diag) {
  const std::size_t d = diag.size();
  return Objective{
      .dimension = d,
      .evaluate =
          [diag = std::move(diag)](const UnitVector& b) {
            double s = 0.0;
            for (std::size_t k = 0; k < diag.size(); ++k) s += diag[k] * b[k] * b[k];
            return s;
          },
      .thread_safe = true,
  };
}

Preset make_preset(std::string_view name, std::size_t d) {
  if (d < 2) throw InvalidConfig("preset dimension must be >= 2");
  if (name == "linear") return {"linear", linear_objective(d), -1.0};
  if (name == "symmetric") return {"symmetric", symmetric_objective(d), -std::sqrt(static_cast<double>(d))};
  if (name == "quadratic") {
    std::vector<double> diag(d);
    for (std::size_t k = 0; k < d; ++k) diag[k] = static_cast<double>(d - k);
    return {"quadratic", diagonal_quadratic_objective(std::move(diag)), 1.0};
  }
  throw InvalidConfig("unknown preset '" + std::string(name) + "' (linear, symmetric, quadratic)");
}

RandomSearchResult random_search_minimize(const Objective& f, const UnitVector& start,
                                          std::size_t budget, std::uint64_t seed) {
  PhiloxEngine rng(StreamKey{seed, 0, 0});
  RandomSearchResult best{start, f(start), 1};
  std::vector<double> v(f.dimension);
  for (std::size_t e = 0; e < budget; ++e) {
    for (double& x : v) x = rng.normal();
    UnitVector candidate = normalize(v);
    const double value = f(candidate);
    ++best.evaluations;
    if (value < best.value) {
      best.value = value;
      best.solution = std::move(candidate);
    }
  }
  return best;
}

}  // namespace scor
