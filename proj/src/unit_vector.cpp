#include "scor/unit_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scor/errors.hpp"

namespace scor {

namespace {

void require_finite(std::span<const double> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k])) {
      throw NonFinite("coordinate " + std::to_string(k) + " is not finite");
    }
  }
}

void require_dimension(std::size_t d) {
  if (d < 2) throw InvalidConfig("unit vectors need d >= 2, got d = " + std::to_string(d));
}

}  // namespace

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
  require_dimension(coords_.size());
  require_finite(coords_);
  const double residual = sphere_residual(coords_);
  if (!(residual <= kFeasibilityTolerance)) {
    throw InfeasiblePoint("point is off the unit sphere: |norm^2 - 1| = " +
                          std::to_string(residual));
  }
}

UnitVector UnitVector::uniform(std::size_t d) {
  require_dimension(d);
  return UnitVector(std::vector<double>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

UnitVector UnitVector::axis(std::size_t d, std::size_t index, double sign) {
  require_dimension(d);
  std::vector<double> v(d, 0.0);
  v.at(index) = sign < 0 ? -1.0 : 1.0;
  return UnitVector(std::move(v));
}

UnitVector normalize(std::span<const double> v) {
  require_dimension(v.size());
  require_finite(v);
  // Scale by the max magnitude first so huge or tiny inputs do not over/underflow.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) throw ZeroVector();
  double sum = 0.0;
  for (double x : v) sum += (x / scale) * (x / scale);
  const double norm = std::sqrt(sum);
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = (v[k] / scale) / norm;
  return UnitVector(std::move(out));
}

double sphere_residual(std::span<const double> v) noexcept {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::abs(sum - 1.0);
}

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(sum);
}

}  // namespace scor
