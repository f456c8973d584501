#pragma once

#include <cstddef>
#include <vector>

#include "scor/unit_vector.hpp"

namespace scor {

enum class MoveStatus {
  Ok,
  NoRealSolution,  ///< discriminant < 0: the local step must shrink
  EmptyAdjustSet,  ///< every other coordinate is zeroed, nothing absorbs the move
};

/// Outcome of solving for the adjustment t that keeps an exploratory move on the sphere.
///
/// For a move of `step` on coordinate i the remaining coordinates are split into
/// `zeroed` (|beta_k| < lambda, set to 0) and `adjusted` (shifted by t). t is the
/// root of |adjusted| t^2 + 2 S t + (2 step beta_i + step^2 - Z) = 0 that vanishes
/// as step -> 0, with S the sum over `adjusted` and Z the sum of squares over `zeroed`.
struct Adjustment {
  MoveStatus status = MoveStatus::NoRealSolution;
  double adjustment = 0.0;
  double discriminant = 0.0;
  std::vector<std::size_t> zeroed;
  std::vector<std::size_t> adjusted;

  bool ok() const noexcept { return status == MoveStatus::Ok; }
};

/// Discriminant of the adjustment quadratic; lambda = 0 gives the classic
/// (2 sum_{k != i} beta_k)^2 - 4 (d - 1)(2 step beta_i + step^2).
double move_discriminant(const UnitVector& beta, std::size_t i, double step, double lambda);

Adjustment adjustment_step(const UnitVector& beta, std::size_t i, double step, double lambda);

/// The raw (not re-normalized) point implied by a successful adjustment.
std::vector<double> apply_adjustment(const UnitVector& beta, std::size_t i, double step,
                                     const Adjustment& adj);

struct CandidateMove {
  std::size_t coordinate = 0;
  double signed_step = 0.0;  ///< after local decay
  double adjustment = 0.0;
  std::vector<std::size_t> zeroed;
  std::vector<std::size_t> adjusted;
  UnitVector point;
};

/// Up to 2d exploratory moves around `beta`, ordered (0,+), (0,-), (1,+), (1,-), ...
///
/// Each local step starts at +/-step and is divided by `rho` while no real
/// adjustment exists and its magnitude is still above `phi`. Moves that never
/// become feasible, or have an empty adjusted set, are left out.
/// Candidate points are re-normalized after the raw residual check.
std::vector<CandidateMove> generate_candidates(const UnitVector& beta, double step, double lambda,
                                               double rho, double phi);

}  // namespace scor
