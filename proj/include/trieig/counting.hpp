#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "trieig/errors.hpp"
#include "trieig/exact.hpp"
#include "trieig/spectrum.hpp"

namespace trieig {

// The two-sided Weyl-type counting bounds below are proved for mu > 48 pi^2.
inline constexpr double kCountingValidityThreshold =
    48.0 * std::numbers::pi * std::numbers::pi;

namespace detail {

// Strict comparison of the integer lattice norm k against the threshold
// 9 mu / 16 pi^2, with a relative guard band: the counting definition is
// strict and a value inside the band is refused rather than attributed.
inline bool lattice_below(long long k, long double threshold, double mu) {
  constexpr long double guard = 1e-12L;
  const long double kd = static_cast<long double>(k);
  if (std::fabs(static_cast<double>(kd - threshold)) <=
      static_cast<double>(guard * std::max<long double>(threshold, 1.0L)))
    throw TieWarning(mu, k);
  return kd < threshold;
}

}  // namespace detail

// N(mu): number of lattice pairs of the class with eigenvalue strictly below
// mu on the unit equilateral triangle.  Exact integer enumeration.
inline long long counting_function(double mu, SymmetryClass cls) {
  if (!(mu >= 0.0))
    throw std::domain_error("counting_function: mu must be >= 0");
  constexpr long double pi = std::numbers::pi_v<long double>;
  const long double threshold = 9.0L * static_cast<long double>(mu) / (16.0L * pi * pi);
  long long count = 0;
  const long long mcap = static_cast<long long>(std::sqrt(static_cast<double>(threshold))) + 2;
  for (long long m = 0; m <= mcap; ++m) {
    const long double disc = 4.0L * threshold - 3.0L * static_cast<long double>(m) * m;
    if (disc <= 0.0L) continue;  // k >= m^2 >= 4/3 threshold: nothing to count
    long long n = static_cast<long long>(
        std::floor((-static_cast<double>(m) + std::sqrt(static_cast<double>(disc))) / 2.0));
    if (n < -1) n = -1;
    while (detail::lattice_below(lattice_norm(m, n + 1), threshold, mu)) ++n;
    while (n >= 0 && !detail::lattice_below(lattice_norm(m, n), threshold, mu)) --n;
    if (n < 0) continue;
    switch (cls) {
      case SymmetryClass::all:
        count += n + 1;
        break;
      case SymmetryClass::symmetric:  // pairs with m <= n' <= n
        if (n >= m) count += n - m + 1;
        break;
      case SymmetryClass::antisymmetric:  // pairs with n' < m, n' <= n
        count += std::min(n, m - 1) + 1;
        break;
    }
  }
  return count;
}

struct CountingBound {
  double mu = 0.0;
  std::optional<double> lower;  // absent for the symmetric class
  double upper = 0.0;
  SymmetryClass cls = SymmetryClass::all;
};

// Closed-form two-sided bounds on the counting function, valid for
// mu > 48 pi^2 (upper bound only, for the symmetric class).
inline CountingBound counting_bounds(double mu, SymmetryClass cls) {
  if (!(mu > kCountingValidityThreshold))
    throw std::domain_error("counting_bounds: bounds require mu > 48 pi^2");
  constexpr double pi = std::numbers::pi;
  const double s3 = std::sqrt(3.0);
  const double root = std::sqrt(mu);
  CountingBound b;
  b.mu = mu;
  b.cls = cls;
  switch (cls) {
    case SymmetryClass::all:
      b.upper = s3 / (16.0 * pi) * mu + (6.0 - s3) / (4.0 * pi) * root + 1.5;
      b.lower = s3 / (16.0 * pi) * mu + s3 / (4.0 * pi) * root - 1.5;
      break;
    case SymmetryClass::symmetric:
      b.upper = s3 / (32.0 * pi) * mu + 3.0 / (4.0 * pi) * root + 1.25;
      break;
    case SymmetryClass::antisymmetric:
      throw std::domain_error("counting_bounds: no bound for the antisymmetric class");
  }
  return b;
}

namespace detail {

// Inversions of the counting bounds; valid for j >= 26 (full) and j >= 15
// (symmetric).
inline double full_lower_bound_mu(long long j) {
  constexpr double pi = std::numbers::pi;
  const double s3 = std::sqrt(3.0);
  const double t = static_cast<double>(j) - 1.5;
  return 16.0 * pi / s3 * t -
         8.0 * (2.0 * s3 - 1.0) * std::sqrt(4.0 * pi / s3 * t + 13.0 - 4.0 * s3) +
         8.0 * (13.0 - 4.0 * s3);
}

inline double full_upper_bound_mu(long long j) {
  constexpr double pi = std::numbers::pi;
  const double s3 = std::sqrt(3.0);
  const double t = static_cast<double>(j) + 0.5;
  return 16.0 * pi / s3 * t - 8.0 * std::sqrt(4.0 * pi / s3 * t + 1.0) + 8.0;
}

inline double symmetric_lower_bound_mu(long long j) {
  constexpr double pi = std::numbers::pi;
  const double s3 = std::sqrt(3.0);
  const double t = static_cast<double>(j) - 1.25;
  return 32.0 * pi / s3 * t - 32.0 * std::sqrt(2.0 * s3 * pi * t + 9.0) + 96.0;
}

}  // namespace detail

struct IndexBound {
  long long j = 0;
  double lower = 0.0;
  std::optional<double> upper;  // absent for the symmetric class
  SymmetryClass cls = SymmetryClass::all;
};

inline IndexBound invert_bounds(long long j, SymmetryClass cls) {
  IndexBound b;
  b.j = j;
  b.cls = cls;
  switch (cls) {
    case SymmetryClass::all:
      if (j < 26)
        throw std::domain_error("invert_bounds: full-spectrum bounds require j >= 26");
      b.lower = detail::full_lower_bound_mu(j);
      b.upper = detail::full_upper_bound_mu(j);
      break;
    case SymmetryClass::symmetric:
      if (j < 15)
        throw std::domain_error("invert_bounds: symmetric bound requires j >= 15");
      b.lower = detail::symmetric_lower_bound_mu(j);
      break;
    case SymmetryClass::antisymmetric:
      throw std::domain_error("invert_bounds: no bound for the antisymmetric class");
  }
  return b;
}

// Lower bound on mu_j^s / mu_j from the two inverted counting bounds.
inline double tail_quotient(long long j) {
  return detail::symmetric_lower_bound_mu(j) / detail::full_upper_bound_mu(j);
}

struct TailRatioReport {
  long long jmin = 0, jmax = 0;
  bool all_exceed = false;       // quotient > 11/6 at every checked index
  double min_quotient = 0.0;
  long long argmin = 0;
  bool eventually_monotone = false;
  long long monotone_from = 0;   // quotient nondecreasing from here on
  long long checked = 0;
};

// Confirms the guaranteed symmetric/full eigenvalue quotient exceeds 11/6 on
// [jmin, jmax].  Every index is evaluated up to a 2e7-wide window; beyond
// that a geometric grid is used and monotonicity between consecutive samples
// extends the spot checks.
inline TailRatioReport verify_tail_ratio(long long jmin, long long jmax) {
  if (jmin < 193)
    throw std::domain_error("verify_tail_ratio: bounds are applied for j >= 193 only");
  if (jmax < jmin)
    throw std::domain_error("verify_tail_ratio: empty index range");
  TailRatioReport rep;
  rep.jmin = jmin;
  rep.jmax = jmax;
  rep.all_exceed = true;
  rep.min_quotient = tail_quotient(jmin);
  rep.argmin = jmin;
  rep.monotone_from = jmin;
  constexpr double kRatio = 11.0 / 6.0;

  double prev = rep.min_quotient;
  long long checked = 1;
  if (prev <= kRatio) rep.all_exceed = false;

  auto visit = [&](long long j) {
    const double q = tail_quotient(j);
    ++checked;
    if (q <= kRatio) rep.all_exceed = false;
    if (q < rep.min_quotient) {
      rep.min_quotient = q;
      rep.argmin = j;
    }
    if (q < prev) rep.monotone_from = j;
    prev = q;
  };

  constexpr long long kDenseWindow = 20'000'000;
  if (jmax - jmin <= kDenseWindow) {
    for (long long j = jmin + 1; j <= jmax; ++j) visit(j);
  } else {
    const long long dense_end = jmin + kDenseWindow;
    for (long long j = jmin + 1; j <= dense_end; ++j) visit(j);
    double x = static_cast<double>(dense_end);
    const double growth = 1.001;
    long long j = dense_end;
    while (j < jmax) {
      x *= growth;
      j = std::min(jmax, static_cast<long long>(x) + 1);
      visit(j);
    }
  }
  rep.checked = checked;
  rep.eventually_monotone = rep.monotone_from < jmax;
  return rep;
}

}  // namespace trieig
