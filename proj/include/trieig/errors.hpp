#pragma once

#include <stdexcept>
#include <string>

namespace trieig {

// Strict threshold comparisons in the lattice counting functions refuse to
// attribute a value that lands inside the floating-point guard band.
class TieWarning : public std::runtime_error {
 public:
  TieWarning(double mu, long long k)
      : std::runtime_error("counting tie: k = " + std::to_string(k) +
                           " lies inside the guard band of mu = " +
                           std::to_string(mu)),
        mu_(mu),
        k_(k) {}

  double mu() const { return mu_; }
  long long lattice_value() const { return k_; }

 private:
  double mu_;
  long long k_;
};

class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Eigensolver failed to reach the requested residual; carries iteration stats.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int iterations, double worst_residual)
      : std::runtime_error(what + " (iterations: " + std::to_string(iterations) +
                           ", worst residual: " + std::to_string(worst_residual) +
                           ")"),
        iterations_(iterations),
        worst_residual_(worst_residual) {}

  int iterations() const { return iterations_; }
  double worst_residual() const { return worst_residual_; }

 private:
  int iterations_;
  double worst_residual_;
};

}  // namespace trieig
