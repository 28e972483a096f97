#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "trieig/spectrum.hpp"

namespace trieig {

// Eigenvalue quantum of the unit-side equilateral triangle: its Neumann
// spectrum is (m^2 + mn + n^2) times this constant, m, n >= 0.
inline constexpr double kEquilateralUnit =
    16.0 * std::numbers::pi * std::numbers::pi / 9.0;

struct LatticePoint {
  int m = 0, n = 0;
  long long k = 0;  // m^2 + mn + n^2
};

inline long long lattice_norm(long long m, long long n) {
  return m * m + m * n + n * n;
}

inline bool in_symmetry_class(SymmetryClass cls, int m, int n) {
  switch (cls) {
    case SymmetryClass::all: return true;
    case SymmetryClass::symmetric: return m <= n;
    case SymmetryClass::antisymmetric: return m > n;
  }
  return false;
}

// First `count` lattice points of the class, ordered by lattice norm with
// lexicographic (m, n) tie-break.  The enumeration bound doubles until the
// (count+1)-th point certifies the cutoff, so the result is exhaustive; the
// integer norm keeps tie detection exact.
inline std::vector<LatticePoint> equilateral_lattice(int count,
                                                     SymmetryClass cls) {
  if (count < 1)
    throw std::domain_error("equilateral_lattice: count must be >= 1");
  std::vector<LatticePoint> pts;
  for (long long bound = 16;; bound *= 2) {
    pts.clear();
    for (int m = 0; static_cast<long long>(m) * m <= bound; ++m) {
      for (int n = 0;; ++n) {
        const long long k = lattice_norm(m, n);
        if (k > bound) break;
        if (in_symmetry_class(cls, m, n)) pts.push_back({m, n, k});
      }
    }
    if (static_cast<int>(pts.size()) >= count + 1) break;
  }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return std::tie(a.k, a.m, a.n) < std::tie(b.k, b.m, b.n);
  });
  pts.resize(static_cast<std::size_t>(count));
  return pts;
}

// sigma_{m,n} scaled to a triangle of the given side length.
inline double equilateral_eigenvalue(int m, int n, double side) {
  if (!(side > 0.0))
    throw std::domain_error("equilateral_eigenvalue: side must be positive");
  if (m < 0 || n < 0)
    throw std::domain_error("equilateral_eigenvalue: indices must be >= 0");
  return kEquilateralUnit * static_cast<double>(lattice_norm(m, n)) /
         (side * side);
}

inline Spectrum equilateral_spectrum(int count, double side,
                                     SymmetryClass cls = SymmetryClass::all) {
  if (!(side > 0.0))
    throw std::domain_error("equilateral_spectrum: side must be positive");
  const auto pts = equilateral_lattice(count, cls);
  Spectrum s;
  s.provenance = Provenance::exact;
  s.values.reserve(pts.size());
  s.labels.reserve(pts.size());
  const double inv_side2 = 1.0 / (side * side);
  for (const auto& p : pts) {
    s.values.push_back(kEquilateralUnit * static_cast<double>(p.k) * inv_side2);
    s.labels.push_back({p.m, p.n});
  }
  return s;
}

// Product Neumann spectrum pi^2 (p^2/width^2 + q^2/height^2) of a rectangle,
// p, q >= 0, sorted ascending with (p, q) tie-break.
inline Spectrum rectangle_spectrum(double width, double height, int count) {
  if (!(width > 0.0) || !(height > 0.0))
    throw std::domain_error("rectangle_spectrum: sides must be positive");
  if (count < 1)
    throw std::domain_error("rectangle_spectrum: count must be >= 1");
  constexpr double pi = std::numbers::pi;
  struct Mode {
    int p, q;
    double value;
  };
  std::vector<Mode> modes;
  const double wx = pi * pi / (width * width);
  const double wy = pi * pi / (height * height);
  for (double bound = 8.0 * (wx + wy);; bound *= 2.0) {
    modes.clear();
    for (int p = 0; wx * p * p <= bound; ++p) {
      for (int q = 0;; ++q) {
        const double v = wx * p * p + wy * q * q;
        if (v > bound) break;
        modes.push_back({p, q, v});
      }
    }
    if (static_cast<int>(modes.size()) >= count + 1) break;
  }
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    return std::tie(a.value, a.p, a.q) < std::tie(b.value, b.p, b.q);
  });
  modes.resize(static_cast<std::size_t>(count));
  Spectrum s;
  s.provenance = Provenance::exact;
  for (const auto& m : modes) {
    s.values.push_back(m.value);
    s.labels.push_back({m.p, m.q});
  }
  return s;
}

// Ratio of symmetric to full eigenvalue sums of the unit equilateral,
// M_j^s / M_j, carried as exact integer lattice sums so the 11/6 and 8/5
// comparisons are rational.
struct RatioRow {
  int j = 0;
  long long full_sum = 0;       // sum of full-spectrum multiples, indices 2..j
  long long symmetric_sum = 0;  // sum of symmetric multiples, indices 2..j
  double ratio = 0.0;
  bool exceeds_11_6 = false;    // 6 * symmetric_sum > 11 * full_sum
  bool at_least_8_5 = false;    // 5 * symmetric_sum >= 8 * full_sum
  bool equals_8_5 = false;      // 5 * symmetric_sum == 8 * full_sum
};

inline std::vector<RatioRow> ratio_table(int jmax) {
  if (jmax < 2) throw std::domain_error("ratio_table: jmax must be >= 2");
  if (jmax > 1'000'000)
    throw std::domain_error("ratio_table: jmax exceeds enumeration capacity");
  const auto full = equilateral_lattice(jmax, SymmetryClass::all);
  const auto sym = equilateral_lattice(jmax, SymmetryClass::symmetric);
  std::vector<RatioRow> rows;
  rows.reserve(static_cast<std::size_t>(jmax - 1));
  long long fs = 0, ss = 0;
  for (int j = 2; j <= jmax; ++j) {
    fs += full[static_cast<std::size_t>(j - 1)].k;
    ss += sym[static_cast<std::size_t>(j - 1)].k;
    RatioRow r;
    r.j = j;
    r.full_sum = fs;
    r.symmetric_sum = ss;
    r.ratio = static_cast<double>(ss) / static_cast<double>(fs);
    r.exceeds_11_6 = 6 * ss > 11 * fs;
    r.at_least_8_5 = 5 * ss >= 8 * fs;
    r.equals_8_5 = 5 * ss == 8 * fs;
    rows.push_back(r);
  }
  return rows;
}

// Checks the stated index sets: the 11/6 bound strictly for j = 3, 6 and
// 10..jmax, the 8/5 bound for j = 4, 5, 7, 8, 9 with equality exactly at
// j = 4.
struct RatioLemmaReport {
  bool pass = true;
  std::vector<int> failures;
};

inline RatioLemmaReport verify_ratio_lemma(const std::vector<RatioRow>& rows) {
  RatioLemmaReport report;
  for (const auto& r : rows) {
    bool ok = true;
    if (r.j == 3 || r.j == 6 || r.j >= 10) {
      ok = r.exceeds_11_6;
    } else if (r.j == 4) {
      ok = r.equals_8_5;
    } else if (r.j == 5 || r.j == 7 || r.j == 8 || r.j == 9) {
      ok = r.at_least_8_5 && !r.equals_8_5;
    }
    if (!ok) {
      report.pass = false;
      report.failures.push_back(r.j);
    }
  }
  return report;
}

}  // namespace trieig
