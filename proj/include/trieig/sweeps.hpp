#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "trieig/exact.hpp"
#include "trieig/fem.hpp"
#include "trieig/geometry.hpp"
#include "trieig/parallel.hpp"
#include "trieig/spectrum.hpp"

namespace trieig {

// The isosceles triangle of the sweep family: base 2, apex height cot(a/2),
// so the angle between the two equal sides is the aperture a for the whole
// range (0, pi).
inline TriangleDomain aperture_triangle(double aperture) {
  if (!(aperture > 0.0 && aperture < std::numbers::pi))
    throw std::domain_error("aperture_triangle: aperture must lie in (0, pi)");
  return triangle(0.0, 1.0 / std::tan(0.5 * aperture));
}

struct SweepSpec {
  enum class Family { aperture_isosceles, rectangle_aspect };
  Family family = Family::aperture_isosceles;
  double lo = 0.0, hi = 1.0;
  int samples = 64;
  std::vector<int> n_values = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  int eigen_count = 6;              // aperture family: mu_2 .. mu_count
  std::vector<int> levels = {4, 5, 6};
  SolveOptions solve;
  int threads = 0;

  void validate() const {
    if (!(lo < hi)) throw std::domain_error("sweep: lo must be below hi");
    if (samples < 2) throw std::domain_error("sweep: need at least 2 samples");
  }
};

struct ApertureSample {
  double aperture = 0.0;
  double apex_height = 0.0;
  double diameter2 = 0.0;
  std::vector<double> mu_d2;   // mu_2 D^2 .. mu_count D^2
  std::vector<double> errors;  // matching error estimates, times D^2
  bool failed = false;
  std::string failure;
};

struct ApertureSweep {
  std::vector<ApertureSample> rows;
  int eigen_count = 0;
};

// Diameter-normalized eigenvalues along the isosceles aperture family, by
// extrapolated finite elements.  A failed solve marks its row instead of
// aborting the sweep.
inline ApertureSweep sweep_aperture(const SweepSpec& spec) {
  spec.validate();
  if (spec.family != SweepSpec::Family::aperture_isosceles)
    throw std::domain_error("sweep_aperture: wrong family");
  if (!(spec.lo > 0.0 && spec.hi < std::numbers::pi))
    throw std::domain_error("sweep_aperture: aperture range must lie in (0, pi)");

  ApertureSweep sweep;
  sweep.eigen_count = spec.eigen_count;
  sweep.rows.resize(static_cast<std::size_t>(spec.samples));
  parallel_for(
      0, spec.samples,
      [&](int i) {
        ApertureSample& row = sweep.rows[static_cast<std::size_t>(i)];
        row.aperture = spec.lo + (spec.hi - spec.lo) * i / (spec.samples - 1);
        const TriangleDomain t = aperture_triangle(row.aperture);
        row.apex_height = t.vertex(2).y;
        const double d = diameter(t);
        row.diameter2 = d * d;
        try {
          const Spectrum s =
              solve_extrapolated(t, spec.eigen_count, spec.levels, spec.solve);
          for (int j = 2; j <= spec.eigen_count; ++j) {
            row.mu_d2.push_back(s.value(j) * row.diameter2);
            row.errors.push_back(
                s.error_estimates[static_cast<std::size_t>(j - 1)] * row.diameter2);
          }
        } catch (const std::exception& e) {
          row.failed = true;
          row.failure = e.what();
        }
      },
      spec.threads);
  return sweep;
}

struct RectangleSample {
  double aspect = 0.0;     // long/short side ratio
  double diameter2 = 0.0;
  std::vector<double> sums;  // M_n D^2 for each requested n
};

struct RectangleSweep {
  std::vector<RectangleSample> rows;
  std::vector<int> n_values;
  std::vector<int> beaten;  // n for which some aspect > 1 beats the square
};

// Exact diameter-normalized eigenvalue sums of the rectangle family with
// sides 1 and 1/aspect.  The first sample must be the square so the beaten
// set is well defined.
inline RectangleSweep sweep_rectangle(const SweepSpec& spec) {
  spec.validate();
  if (spec.family != SweepSpec::Family::rectangle_aspect)
    throw std::domain_error("sweep_rectangle: wrong family");
  if (!(spec.lo >= 1.0))
    throw std::domain_error("sweep_rectangle: aspect ratios start at 1");

  const int nmax = *std::max_element(spec.n_values.begin(), spec.n_values.end());
  RectangleSweep sweep;
  sweep.n_values = spec.n_values;
  sweep.rows.resize(static_cast<std::size_t>(spec.samples));
  parallel_for(
      0, spec.samples,
      [&](int i) {
        RectangleSample& row = sweep.rows[static_cast<std::size_t>(i)];
        row.aspect = spec.lo + (spec.hi - spec.lo) * i / (spec.samples - 1);
        const double height = 1.0 / row.aspect;
        row.diameter2 = 1.0 + height * height;
        const Spectrum s = rectangle_spectrum(1.0, height, nmax);
        for (int n : spec.n_values)
          row.sums.push_back(eigenvalue_sum(s, n) * row.diameter2);
      },
      spec.threads);

  for (std::size_t c = 0; c < spec.n_values.size(); ++c) {
    const double square = sweep.rows.front().sums[c];
    for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
      if (sweep.rows[i].sums[c] < square * (1.0 - 1e-12)) {
        sweep.beaten.push_back(spec.n_values[c]);
        break;
      }
    }
  }
  return sweep;
}

struct MinimizeResult {
  double aperture = 0.0;
  double value = 0.0;  // mu_4 D^2 at the minimizer
  int evaluations = 0;
};

// Golden-section minimization of extrapolated mu_4 D^2 over subequilateral
// apertures.  The bracket must stay within (0, pi/3] and contain an interior
// minimum.
inline MinimizeResult minimize_mu4(double lo, double hi,
                                   const std::vector<int>& levels,
                                   double aperture_tol = 1e-4,
                                   const SolveOptions& opt = {}) {
  constexpr double third_pi = std::numbers::pi / 3.0;
  if (!(lo < hi)) throw std::domain_error("minimize_mu4: empty bracket");
  if (!(lo > 0.0) || hi > third_pi + 1e-12)
    throw std::domain_error(
        "minimize_mu4: bracket must lie within the subequilateral range (0, pi/3]");

  int evaluations = 0;
  auto objective = [&](double alpha) {
    ++evaluations;
    const TriangleDomain t = aperture_triangle(alpha);
    const Spectrum s = solve_extrapolated(t, 4, levels, opt);
    const double d = diameter(t);
    return s.value(4) * d * d;
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(x1), f2 = objective(x2);
  while (b - a > aperture_tol) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    }
  }
  MinimizeResult result;
  result.aperture = 0.5 * (a + b);
  result.value = std::min(f1, f2);
  result.evaluations = evaluations;

  // reject brackets whose minimum sits on the boundary
  const double edge = std::max(2.0 * aperture_tol, 1e-3 * (hi - lo));
  if (result.aperture - lo < edge || hi - result.aperture < edge)
    throw std::domain_error("minimize_mu4: no interior minimum in the bracket");
  return result;
}

}  // namespace trieig
