#include "scor/sphere_geometry.hpp"

#include <cmath>
#include <string>

#include "scor/errors.hpp"

namespace scor {

namespace {

struct Partition {
  std::vector<std::size_t> zeroed;
  std::vector<std::size_t> adjusted;
  double adjusted_sum = 0.0;
  double zeroed_sumsq = 0.0;
};

Partition partition(const UnitVector& beta, std::size_t i, double lambda) {
  Partition p;
  for (std::size_t k = 0; k < beta.dimension(); ++k) {
    if (k == i) continue;
    if (std::abs(beta[k]) < lambda) {
      p.zeroed.push_back(k);
      p.zeroed_sumsq += beta[k] * beta[k];
    } else {
      p.adjusted.push_back(k);
      p.adjusted_sum += beta[k];
    }
  }
  return p;
}

double discriminant(const Partition& p, double beta_i, double step) {
  const double b = 2.0 * p.adjusted_sum;
  const double c = 2.0 * step * beta_i + step * step - p.zeroed_sumsq;
  return b * b - 4.0 * static_cast<double>(p.adjusted.size()) * c;
}

// The root of a t^2 + b t + c = 0 that goes to 0 with c. That is the "+sqrt" root when
// b > 0 and the "-sqrt" root when b < 0; with b = 0 neither vanishes and "+sqrt" is used.
double continuous_root(double a, double b, double c, double disc) {
  const double root = std::sqrt(disc);
  if (b > 0.0) return (2.0 * c) / (-b - root);
  if (b < 0.0) return (2.0 * c) / (-b + root);
  return root / (2.0 * a);
}

void check_args(const UnitVector& beta, std::size_t i, double step, double lambda) {
  if (i >= beta.dimension()) {
    throw InvalidConfig("coordinate index " + std::to_string(i) + " out of range for d = " +
                        std::to_string(beta.dimension()));
  }
  if (step == 0.0 || !std::isfinite(step)) throw InvalidConfig("step must be finite and non-zero");
  if (!(lambda >= 0.0)) throw InvalidConfig("sparsity threshold must be >= 0");
}

Adjustment solve(const Partition& p, double beta_i, double step) {
  Adjustment adj;
  adj.zeroed = p.zeroed;
  adj.adjusted = p.adjusted;
  adj.discriminant = discriminant(p, beta_i, step);
  if (p.adjusted.empty()) {
    adj.status = MoveStatus::EmptyAdjustSet;
    return adj;
  }
  if (adj.discriminant < 0.0) {
    adj.status = MoveStatus::NoRealSolution;
    return adj;
  }
  const double a = static_cast<double>(p.adjusted.size());
  const double b = 2.0 * p.adjusted_sum;
  const double c = 2.0 * step * beta_i + step * step - p.zeroed_sumsq;
  adj.adjustment = continuous_root(a, b, c, adj.discriminant);
  adj.status = MoveStatus::Ok;
  return adj;
}

}  // namespace

double move_discriminant(const UnitVector& beta, std::size_t i, double step, double lambda) {
  check_args(beta, i, step, lambda);
  return discriminant(partition(beta, i, lambda), beta[i], step);
}

Adjustment adjustment_step(const UnitVector& beta, std::size_t i, double step, double lambda) {
  check_args(beta, i, step, lambda);
  return solve(partition(beta, i, lambda), beta[i], step);
}

std::vector<double> apply_adjustment(const UnitVector& beta, std::size_t i, double step,
                                     const Adjustment& adj) {
  if (!adj.ok()) throw InvalidConfig("cannot apply an infeasible adjustment");
  std::vector<double> point(beta.values());
  point[i] += step;
  for (std::size_t k : adj.adjusted) point[k] += adj.adjustment;
  for (std::size_t k : adj.zeroed) point[k] = 0.0;
  return point;
}

std::vector<CandidateMove> generate_candidates(const UnitVector& beta, double step, double lambda,
                                               double rho, double phi) {
  if (!(phi > 0.0) || !(step > phi)) throw InvalidConfig("need step > phi > 0");
  if (!(rho > 1.0)) throw InvalidConfig("step decay rate must be > 1");
  if (!(lambda >= 0.0)) throw InvalidConfig("sparsity threshold must be >= 0");

  const std::size_t d = beta.dimension();
  std::vector<CandidateMove> out;
  out.reserve(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    const Partition p = partition(beta, i, lambda);
    if (p.adjusted.empty()) continue;
    for (const double sign : {1.0, -1.0}) {
      double local = sign * step;
      double disc = discriminant(p, beta[i], local);
      while (disc < 0.0 && std::abs(local) > phi) {
        local /= rho;
        disc = discriminant(p, beta[i], local);
      }
      if (disc < 0.0) continue;
      Adjustment adj = solve(p, beta[i], local);
      std::vector<double> raw = apply_adjustment(beta, i, local, adj);
      if (!(sphere_residual(raw) <= kFeasibilityTolerance)) continue;
      out.push_back(CandidateMove{
          .coordinate = i,
          .signed_step = local,
          .adjustment = adj.adjustment,
          .zeroed = std::move(adj.zeroed),
          .adjusted = std::move(adj.adjusted),
          .point = normalize(raw),
      });
    }
  }
  return out;
}

}  // namespace scor
