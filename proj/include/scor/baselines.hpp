#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "scor/objectives.hpp"
#include "scor/optimizer.hpp"
#include "scor/unit_vector.hpp"

namespace scor {

/// Nelder-Mead settings. Coefficients are the standard (1, 2, 1/2, 1/2); the initial
/// simplex perturbs each coordinate of x0 by 5%, or by 0.00025 when it is zero.
struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double tol_x = 1e-8;
  double tol_f = 1e-8;
  double relative_step = 0.05;
  double zero_step = 0.00025;
  /// Evaluation cap per search dimension d (not per free variable).
  std::size_t evals_per_dimension = 200;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Unconstrained downhill simplex minimization.
SimplexResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                   std::vector<double> x0, const NelderMeadOptions& options,
                                   std::size_t max_evaluations);

enum class BaselineMethod { NelderMead, StepDown, MinMax };

const char* to_string(BaselineMethod m) noexcept;

struct BaselineResult {
  BaselineMethod method;
  UnitVector solution;
  double objective_value = 0.0;
  std::size_t evaluations = 0;
  /// Step-down: markers by decreasing individual EHUM.
  std::vector<std::size_t> marker_order;
  /// Min-max: the solution lives on the (max, min) reduced features.
  bool min_max_reduced = false;
};

/// Best sign of marker k used alone: returns +1 or -1 and writes its EHUM to `value`.
double individual_ehum_sign(const MulticlassSample& sample, std::size_t marker, double* value = nullptr);

/// Fixes coordinate 0 at the sign maximizing marker 0's individual EHUM, runs
/// Nelder-Mead on the remaining coordinates (started at 0) to maximize the criterion,
/// and normalizes.
BaselineResult nelder_mead_estimate(Criterion criterion, const MulticlassSample& sample,
                                    const NelderMeadOptions& options = {});

/// The same parameterization for a black-box Objective, minimized: coordinate 0 is
/// fixed at whichever of +1/-1 gives the lower f(+-e_0).
BaselineResult nelder_mead_sphere(const Objective& f, const NelderMeadOptions& options = {});

/// Golden-section search for a maximum of `f` on [lo, hi], stopping at width `tol`.
/// Returns the best abscissa seen; `value` receives f there.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol, double* value = nullptr);

/// Greedy one-coefficient-at-a-time estimator seeded by the best individual marker.
/// Each new coefficient maximizes the criterion over a 201-point grid on [-5, 5]
/// (ties to the coefficient closest to zero) refined by golden section to 1e-6.
BaselineResult step_down_estimate(Criterion criterion, const MulticlassSample& sample);

/// Each subject reduced to (max_k x_k, min_k x_k).
MulticlassSample min_max_reduce(const MulticlassSample& sample);

/// Fits (cos t, sin t) on the min-max reduced sample: 720-angle scan, golden-section
/// refinement to 1e-8. Requires d >= 2.
BaselineResult min_max_estimate(Criterion criterion, const MulticlassSample& sample);

}  // namespace scor
