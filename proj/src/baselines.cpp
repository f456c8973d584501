#include "scor/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "scor/errors.hpp"

namespace scor {

const char* to_string(BaselineMethod m) noexcept {
  switch (m) {
    case BaselineMethod::NelderMead:
      return "nm";
    case BaselineMethod::StepDown:
      return "stepdown";
    case BaselineMethod::MinMax:
      return "minmax";
  }
  return "unknown";
}

SimplexResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                   std::vector<double> x0, const NelderMeadOptions& options,
                                   std::size_t max_evaluations) {
  const std::size_t n = x0.size();
  if (n == 0) throw InvalidConfig("Nelder-Mead needs at least one variable");

  struct Vertex {
    std::vector<double> x;
    double f;
  };
  SimplexResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> x = x0;
    x[k] = x[k] != 0.0 ? (1.0 + options.relative_step) * x[k] : options.zero_step;
    simplex.push_back({x, eval(x)});
  }
  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();

  auto affine = [n](const std::vector<double>& a, const std::vector<double>& b, double t) {
    // a + t (b - a)
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + t * (b[k] - a[k]);
    return out;
  };

  while (true) {
    double spread = 0.0;
    double diameter = 0.0;
    for (std::size_t v = 1; v <= n; ++v) {
      spread = std::max(spread, std::abs(simplex[v].f - simplex[0].f));
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter, std::abs(simplex[v].x[k] - simplex[0].x[k]));
      }
    }
    if (spread <= options.tol_f && diameter <= options.tol_x) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= max_evaluations) break;
    ++result.iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[v].x[k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    Vertex& worst = simplex[n];
    const auto xr = affine(centroid, worst.x, -options.reflection);
    const double fr = eval(xr);
    bool shrink = false;
    if (fr < simplex[0].f) {
      const auto xe = affine(centroid, worst.x, -options.reflection * options.expansion);
      const double fe = eval(xe);
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < simplex[n - 1].f) {
      worst = {xr, fr};
    } else if (fr < worst.f) {
      const auto xc = affine(centroid, xr, options.contraction);
      const double fc = eval(xc);
      if (fc <= fr) {
        worst = {xc, fc};
      } else {
        shrink = true;
      }
    } else {
      const auto xcc = affine(centroid, worst.x, options.contraction);
      const double fcc = eval(xcc);
      if (fcc < worst.f) {
        worst = {xcc, fcc};
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t v = 1; v <= n; ++v) {
        simplex[v].x = affine(simplex[0].x, simplex[v].x, options.shrink);
        simplex[v].f = eval(simplex[v].x);
      }
    }
    order();
  }
  result.x = simplex[0].x;
  result.value = simplex[0].f;
  return result;
}

double individual_ehum_sign(const MulticlassSample& sample, std::size_t marker, double* value) {
  const std::size_t d = sample.dimension();
  if (marker >= d) throw InvalidConfig("marker index out of range");
  std::vector<double> e(d, 0.0);
  e[marker] = 1.0;
  const double plus = ehum(e, sample);
  e[marker] = -1.0;
  const double minus = ehum(e, sample);
  if (value) *value = std::max(plus, minus);
  return plus >= minus ? 1.0 : -1.0;
}

namespace {

std::vector<double> with_leading(double lead, std::span<const double> rest) {
  std::vector<double> beta;
  beta.reserve(rest.size() + 1);
  beta.push_back(lead);
  beta.insert(beta.end(), rest.begin(), rest.end());
  return beta;
}

void require_markers(const MulticlassSample& sample, std::size_t min_d) {
  if (sample.dimension() < min_d) {
    throw InvalidConfig("method needs at least " + std::to_string(min_d) + " markers");
  }
}

}  // namespace

BaselineResult nelder_mead_estimate(Criterion criterion, const MulticlassSample& sample,
                                    const NelderMeadOptions& options) {
  require_markers(sample, 2);
  const std::size_t d = sample.dimension();
  const double lead = individual_ehum_sign(sample, 0);
  auto f = [&](std::span<const double> x) {
    return -criterion_value(criterion, with_leading(lead, x), sample);
  };
  const SimplexResult r =
      nelder_mead_minimize(f, std::vector<double>(d - 1, 0.0), options, options.evals_per_dimension * d);
  UnitVector solution = normalize(with_leading(lead, r.x));
  const double value = criterion_value(criterion, solution.coords(), sample);
  return BaselineResult{
      .method = BaselineMethod::NelderMead,
      .solution = std::move(solution),
      .objective_value = value,
      .evaluations = r.evaluations + 2,
  };
}

BaselineResult nelder_mead_sphere(const Objective& f, const NelderMeadOptions& options) {
  const std::size_t d = f.dimension;
  if (d < 2) throw InvalidConfig("objective dimension must be >= 2");
  const double lead = f(UnitVector::axis(d, 0, 1.0)) <= f(UnitVector::axis(d, 0, -1.0)) ? 1.0 : -1.0;
  auto g = [&](std::span<const double> x) { return f(normalize(with_leading(lead, x))); };
  const SimplexResult r =
      nelder_mead_minimize(g, std::vector<double>(d - 1, 0.0), options, options.evals_per_dimension * d);
  UnitVector solution = normalize(with_leading(lead, r.x));
  const double value = f(solution);
  return BaselineResult{
      .method = BaselineMethod::NelderMead,
      .solution = std::move(solution),
      .objective_value = value,
      .evaluations = r.evaluations + 3,
  };
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol, double* value) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best_x = fc >= fd ? c : d;
  double best_f = std::max(fc, fd);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best_f) {
        best_f = fc;
        best_x = c;
      }
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best_f) {
        best_f = fd;
        best_x = d;
      }
    }
  }
  if (value) *value = best_f;
  return best_x;
}

BaselineResult step_down_estimate(Criterion criterion, const MulticlassSample& sample) {
  require_markers(sample, 2);
  const std::size_t d = sample.dimension();
  constexpr int kGridPoints = 201;
  constexpr double kLo = -5.0;
  constexpr double kHi = 5.0;
  constexpr double kRefineTol = 1e-6;
  const double spacing = (kHi - kLo) / (kGridPoints - 1);

  std::vector<double> individual(d);
  std::vector<double> sign(d);
  for (std::size_t k = 0; k < d; ++k) sign[k] = individual_ehum_sign(sample, k, &individual[k]);
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return individual[a] > individual[b]; });

  std::vector<double> coef(d, 0.0);
  coef[order[0]] = sign[order[0]];
  std::size_t evaluations = 2 * d;
  std::vector<double> unit(d, 0.0);

  for (std::size_t step = 1; step < d; ++step) {
    const std::size_t k = order[step];
    // Current scores are fixed; the new marker enters as base + v * x_k.
    const ScoreSet base = scores(coef, sample);
    std::fill(unit.begin(), unit.end(), 0.0);
    unit[k] = 1.0;
    const ScoreSet column = scores(unit, sample);
    ScoreSet trial = base;
    auto g = [&](double v) {
      ++evaluations;
      for (std::size_t j = 0; j < base.classes.size(); ++j) {
        for (std::size_t r = 0; r < base.classes[j].size(); ++r) {
          trial.classes[j][r] = base.classes[j][r] + v * column.classes[j][r];
        }
      }
      return criterion_value(criterion, trial);
    };

    double best_v = 0.0;
    double best_f = -1.0;
    for (int m = 0; m < kGridPoints; ++m) {
      const double v = m == (kGridPoints - 1) / 2 ? 0.0 : kLo + spacing * m;
      const double fv = g(v);
      const bool closer = std::abs(v) < std::abs(best_v) ||
                          (std::abs(v) == std::abs(best_v) && v < best_v);
      if (fv > best_f || (fv == best_f && closer)) {
        best_f = fv;
        best_v = v;
      }
    }
    double refined_f = 0.0;
    const double refined = golden_section_maximize(g, std::max(kLo, best_v - spacing),
                                                   std::min(kHi, best_v + spacing), kRefineTol,
                                                   &refined_f);
    coef[k] = refined_f > best_f ? refined : best_v;
  }

  UnitVector solution = normalize(coef);
  const double value = criterion_value(criterion, solution.coords(), sample);
  return BaselineResult{
      .method = BaselineMethod::StepDown,
      .solution = std::move(solution),
      .objective_value = value,
      .evaluations = evaluations + 1,
      .marker_order = std::move(order),
  };
}

MulticlassSample min_max_reduce(const MulticlassSample& sample) {
  std::vector<std::vector<double>> blocks(sample.num_classes());
  for (std::size_t j = 0; j < sample.num_classes(); ++j) {
    const std::size_t n = sample.class_size(j);
    blocks[j].reserve(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = sample.row(j, r);
      const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
      blocks[j].push_back(*hi);
      blocks[j].push_back(*lo);
    }
  }
  return MulticlassSample(2, std::move(blocks));
}

BaselineResult min_max_estimate(Criterion criterion, const MulticlassSample& sample) {
  require_markers(sample, 2);
  constexpr int kAngles = 720;
  constexpr double kRefineTol = 1e-8;
  const double spacing = 2.0 * std::numbers::pi / kAngles;

  const MulticlassSample reduced = min_max_reduce(sample);
  const ScoreSet max_scores = scores(std::vector<double>{1.0, 0.0}, reduced);
  const ScoreSet min_scores = scores(std::vector<double>{0.0, 1.0}, reduced);
  ScoreSet trial = max_scores;
  std::size_t evaluations = 0;
  auto g = [&](double theta) {
    ++evaluations;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (std::size_t j = 0; j < trial.classes.size(); ++j) {
      for (std::size_t r = 0; r < trial.classes[j].size(); ++r) {
        trial.classes[j][r] = c * max_scores.classes[j][r] + s * min_scores.classes[j][r];
      }
    }
    return criterion_value(criterion, trial);
  };

  double best_theta = 0.0;
  double best_f = -1.0;
  for (int m = 0; m < kAngles; ++m) {
    const double theta = spacing * m;
    const double f = g(theta);
    if (f > best_f) {
      best_f = f;
      best_theta = theta;
    }
  }
  double refined_f = 0.0;
  const double refined = golden_section_maximize(g, best_theta - spacing, best_theta + spacing,
                                                 kRefineTol, &refined_f);
  const double theta = refined_f > best_f ? refined : best_theta;

  UnitVector solution = normalize(std::vector<double>{std::cos(theta), std::sin(theta)});
  const double value = criterion_value(criterion, solution.coords(), reduced);
  return BaselineResult{
      .method = BaselineMethod::MinMax,
      .solution = std::move(solution),
      .objective_value = value,
      .evaluations = evaluations + 1,
      .min_max_reduced = true,
  };
}

}  // namespace scor
