#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scor {

/// Largest accepted |sum(x_k^2) - 1| for a point to count as on the sphere.
inline constexpr double kFeasibilityTolerance = 1e-10;

/// A point on the (d-1)-dimensional unit sphere in R^d, d >= 2.
///
/// The constructor validates; it never silently rescales. Use normalize()
/// to project an arbitrary non-zero vector onto the sphere.
class UnitVector {
 public:
  explicit UnitVector(std::vector<double> coords);

  /// beta_k = 1/sqrt(d) for every k.
  static UnitVector uniform(std::size_t d);
  /// sign * e_index.
  static UnitVector axis(std::size_t d, std::size_t index, double sign = 1.0);

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& values() const noexcept { return coords_; }
  double operator[](std::size_t k) const { return coords_[k]; }

  friend bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  std::vector<double> coords_;
};

/// v / |v|. Throws ZeroVector, NonFinite, or InvalidConfig (d < 2).
UnitVector normalize(std::span<const double> v);

/// |sum(v_k^2) - 1|.
double sphere_residual(std::span<const double> v) noexcept;

double distance(std::span<const double> a, std::span<const double> b);

inline double distance(const UnitVector& a, const UnitVector& b) {
  return distance(a.coords(), b.coords());
}

}  // namespace scor
