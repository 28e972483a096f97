#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace trieig {

enum class Provenance { exact, fem, extrapolated };

// Index classes of the equilateral lattice (m, n): eigenfunctions with
// m <= n are symmetric across a bisecting line of the triangle, those with
// m > n are antisymmetric.
enum class SymmetryClass { all, symmetric, antisymmetric };

// A sorted list of Neumann eigenvalues with 1-based indexing, so value(1) is
// the zero eigenvalue of the constant mode (except for the antisymmetric
// index subset, which excludes it).
struct Spectrum {
  std::vector<double> values;              // nondecreasing
  std::vector<std::array<int, 2>> labels;  // optional per-value index pair
  Provenance provenance = Provenance::exact;
  std::vector<double> error_estimates;     // optional, per value

  int size() const { return static_cast<int>(values.size()); }

  double value(int j) const {
    if (j < 1 || j > size())
      throw std::out_of_range("Spectrum::value: index " + std::to_string(j) +
                              " not in [1, " + std::to_string(size()) + "]");
    return values[static_cast<std::size_t>(j - 1)];
  }

  bool has_labels() const { return !labels.empty(); }
  bool has_error_estimates() const { return !error_estimates.empty(); }
};

// M_n = mu_2 + ... + mu_n, omitting the zero eigenvalue.
inline double eigenvalue_sum(const Spectrum& s, int n) {
  if (n < 2) throw std::domain_error("eigenvalue_sum: n must be >= 2");
  if (n > s.size())
    throw std::out_of_range("eigenvalue_sum: spectrum has only " +
                            std::to_string(s.size()) + " values, need " +
                            std::to_string(n));
  double sum = 0.0;
  for (int j = 2; j <= n; ++j) sum += s.values[static_cast<std::size_t>(j - 1)];
  return sum;
}

// M_n D^2; multiplying by the squared diameter makes the sum scale invariant.
inline double normalized_sum(const Spectrum& s, double diameter, int n) {
  if (!(diameter > 0.0))
    throw std::domain_error("normalized_sum: diameter must be positive");
  return eigenvalue_sum(s, n) * diameter * diameter;
}

// Accumulated error estimate of M_n (indices 2..n).
inline double eigenvalue_sum_error(const Spectrum& s, int n) {
  if (n < 2) throw std::domain_error("eigenvalue_sum_error: n must be >= 2");
  if (!s.has_error_estimates() || n > static_cast<int>(s.error_estimates.size()))
    throw std::out_of_range("eigenvalue_sum_error: missing error estimates");
  double sum = 0.0;
  for (int j = 2; j <= n; ++j)
    sum += s.error_estimates[static_cast<std::size_t>(j - 1)];
  return sum;
}

}  // namespace trieig
