#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "trieig/errors.hpp"
#include "trieig/geometry.hpp"
#include "trieig/spectrum.hpp"

namespace trieig {

struct Operators {
  Eigen::SparseMatrix<double> stiffness;  // symmetric PSD, kernel = constants
  Eigen::SparseMatrix<double> mass;       // symmetric PD
};

// P1 operators of the weak Neumann eigenproblem.  The one-point quadrature is
// exact for the constant-gradient products and the 3x3 local mass matrix is
// the exact integral, so there is no quadrature error term.
inline Operators assemble(const Mesh& m) {
  const int n = m.node_count();
  double total_area = 0.0;
  for (const auto& e : m.elements) {
    const Point a = m.nodes[static_cast<std::size_t>(e[0])];
    const Point b = m.nodes[static_cast<std::size_t>(e[1])];
    const Point c = m.nodes[static_cast<std::size_t>(e[2])];
    total_area += std::fabs(0.5 * cross(b - a, c - a));
  }

  std::vector<Eigen::Triplet<double>> tk, tm;
  tk.reserve(m.elements.size() * 9);
  tm.reserve(m.elements.size() * 9);
  for (const auto& e : m.elements) {
    const Point p0 = m.nodes[static_cast<std::size_t>(e[0])];
    const Point p1 = m.nodes[static_cast<std::size_t>(e[1])];
    const Point p2 = m.nodes[static_cast<std::size_t>(e[2])];
    const double area2 = cross(p1 - p0, p2 - p0);  // twice the signed area
    const double area = 0.5 * std::fabs(area2);
    if (area <= 1e-14 * total_area)
      throw MeshError("assemble: degenerate element (area " +
                      std::to_string(area) + ")");
    // gradients of the barycentric basis
    const double gx[3] = {(p1.y - p2.y) / area2, (p2.y - p0.y) / area2,
                          (p0.y - p1.y) / area2};
    const double gy[3] = {(p2.x - p1.x) / area2, (p0.x - p2.x) / area2,
                          (p1.x - p0.x) / area2};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double kij = area * (gx[i] * gx[j] + gy[i] * gy[j]);
        const double mij = (i == j ? area / 6.0 : area / 12.0);
        tk.emplace_back(e[i], e[j], kij);
        tm.emplace_back(e[i], e[j], mij);
      }
    }
  }
  Operators ops;
  ops.stiffness.resize(n, n);
  ops.mass.resize(n, n);
  ops.stiffness.setFromTriplets(tk.begin(), tk.end());
  ops.mass.setFromTriplets(tm.begin(), tm.end());
  return ops;
}

struct SolveOptions {
  // Dense generalized reduction below this dimension, shift-invert subspace
  // iteration above it.
  int dense_threshold = 1200;
  double tolerance = 1e-10;
  int max_iterations = 400;
  int block_padding = 10;
  std::uint64_t seed = 0x5eed1e55ULL;
};

struct EigenSolveResult {
  Spectrum spectrum;        // provenance = fem
  Eigen::MatrixXd vectors;  // node x count, mass-orthonormal
  double mass_orthonormality_residual = 0.0;
  double max_residual = 0.0;  // max over pairs of ||K v - mu M v|| / ||M v||
  int mesh_level = 0;
  Mesh mesh;                // the discretization the eigenvectors live on
};

namespace detail {

inline double mass_orthonormality(const Eigen::MatrixXd& v,
                                  const Eigen::SparseMatrix<double>& mass) {
  const Eigen::MatrixXd gram = v.transpose() * (mass * v);
  return (gram - Eigen::MatrixXd::Identity(v.cols(), v.cols()))
      .cwiseAbs()
      .maxCoeff();
}

// Blocked shift-invert subspace iteration with Rayleigh-Ritz extraction in
// the mass inner product.  The shift keeps the factored operator positive
// definite; the constant mode is seeded explicitly so the zero eigenvalue is
// resolved immediately.
inline EigenSolveResult solve_sparse(const Mesh& mesh_in, const Operators& ops,
                                     int count, double shift,
                                     const SolveOptions& opt) {
  const int n = ops.stiffness.rows();
  const int block = std::min(count + opt.block_padding, n - 1);

  Eigen::SparseMatrix<double> shifted = ops.stiffness + shift * ops.mass;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> factor(shifted);
  if (factor.info() != Eigen::Success)
    throw SolverError("solve_neumann: factorization of the shifted operator failed", 0, 0.0);

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd basis(n, block);
  for (int j = 0; j < block; ++j)
    for (int i = 0; i < n; ++i) basis(i, j) = gauss(rng);
  basis.col(0).setOnes();

  Eigen::VectorXd ritz(block);
  double worst = 0.0;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    Eigen::MatrixXd z = factor.solve(ops.mass * basis);
    Eigen::MatrixXd gram = z.transpose() * (ops.mass * z);
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) {
      // rank-deficient block: perturb and continue
      for (int j = 0; j < block; ++j)
        for (int i = 0; i < n; ++i) z(i, j) += 1e-12 * gauss(rng);
      gram = z.transpose() * (ops.mass * z);
      llt.compute(gram);
      if (llt.info() != Eigen::Success)
        throw SolverError("solve_neumann: block lost rank", it, worst);
    }
    const Eigen::MatrixXd y = llt.matrixU().solve<Eigen::OnTheRight>(z);
    Eigen::MatrixXd projected = y.transpose() * (ops.stiffness * y);
    projected = 0.5 * (projected + projected.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected);
    ritz = small.eigenvalues();
    basis = y * small.eigenvectors();

    worst = 0.0;
    bool converged = true;
    for (int j = 0; j < count; ++j) {
      const Eigen::VectorXd residual =
          ops.stiffness * basis.col(j) - ritz(j) * (ops.mass * basis.col(j));
      const double scale = (ops.mass * basis.col(j)).norm() * (ritz(j) + shift);
      const double rel = residual.norm() / std::max(scale, 1e-300);
      worst = std::max(worst, rel);
      if (rel > opt.tolerance) converged = false;
    }
    if (converged) break;
    if (it == opt.max_iterations)
      throw SolverError("solve_neumann: subspace iteration did not converge", it, worst);
  }

  EigenSolveResult result;
  result.mesh = mesh_in;
  result.mesh_level = mesh_in.level;
  result.vectors = basis.leftCols(count);
  result.spectrum.provenance = Provenance::fem;
  result.spectrum.values.assign(ritz.data(), ritz.data() + count);
  result.mass_orthonormality_residual =
      mass_orthonormality(result.vectors, ops.mass);
  for (int j = 0; j < count; ++j) {
    const Eigen::VectorXd mv = ops.mass * result.vectors.col(j);
    const Eigen::VectorXd residual =
        ops.stiffness * result.vectors.col(j) - ritz(j) * mv;
    result.max_residual = std::max(result.max_residual, residual.norm() / mv.norm());
  }
  return result;
}

inline EigenSolveResult solve_dense(const Mesh& mesh_in, const Operators& ops,
                                    int count) {
  const Eigen::MatrixXd k = Eigen::MatrixXd(ops.stiffness);
  const Eigen::MatrixXd m = Eigen::MatrixXd(ops.mass);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      k, m, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw SolverError("solve_neumann: dense generalized reduction failed", 0, 0.0);

  EigenSolveResult result;
  result.mesh = mesh_in;
  result.mesh_level = mesh_in.level;
  result.vectors = solver.eigenvectors().leftCols(count);
  result.spectrum.provenance = Provenance::fem;
  result.spectrum.values.assign(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + count);
  result.mass_orthonormality_residual =
      mass_orthonormality(result.vectors, ops.mass);
  for (int j = 0; j < count; ++j) {
    const Eigen::VectorXd mv = ops.mass * result.vectors.col(j);
    const Eigen::VectorXd residual = ops.stiffness * result.vectors.col(j) -
                                     result.spectrum.values[static_cast<std::size_t>(j)] * mv;
    result.max_residual = std::max(result.max_residual, residual.norm() / mv.norm());
  }
  return result;
}

}  // namespace detail

// The `count` smallest Neumann eigenpairs of the mesh, ascending, with
// mass-orthonormal eigenvectors.
inline EigenSolveResult solve_neumann(const Mesh& m, int count,
                                      const SolveOptions& opt = {}) {
  if (count < 1) throw std::domain_error("solve_neumann: count must be >= 1");
  if (count + 2 > m.node_count())
    throw std::domain_error("solve_neumann: count + 2 exceeds the node count");
  const Operators ops = assemble(m);
  if (m.node_count() <= opt.dense_threshold)
    return detail::solve_dense(m, ops, count);
  double total_area = 0.0;
  for (const auto& e : m.elements) {
    const Point a = m.nodes[static_cast<std::size_t>(e[0])];
    const Point b = m.nodes[static_cast<std::size_t>(e[1])];
    const Point c = m.nodes[static_cast<std::size_t>(e[2])];
    total_area += std::fabs(0.5 * cross(b - a, c - a));
  }
  // Weyl spacing of the domain sets the shift scale
  const double shift = 4.0 * std::numbers::pi / total_area;
  return detail::solve_sparse(m, ops, count, shift, opt);
}

struct ExtrapolationEntry {
  double value = 0.0;
  double error = 0.0;
  double rate = 0.0;   // fitted convergence order
  bool fallback = false;  // non-monotone sequence: finest value was kept
};

struct ExtrapolationReport {
  std::vector<int> levels;
  std::vector<ExtrapolationEntry> entries;
  std::vector<std::vector<double>> level_values;  // raw spectrum per level
};

namespace detail {

// Richardson step from values at three consecutive refinements (h halves
// each time).  The rate is fitted from the sequence itself; the error
// estimate is the distance to the theoretical rate-2 companion extrapolant,
// floored at a twentieth of the last level-to-level difference.
inline ExtrapolationEntry richardson(double v0, double v1, double v2) {
  ExtrapolationEntry entry;
  const double d0 = v0 - v1;
  const double d1 = v1 - v2;
  if (!(d1 > 0.0) || !(d0 > d1)) {
    entry.value = v2;
    entry.error = std::max(std::fabs(d0), std::fabs(d1));
    entry.fallback = true;
    return entry;
  }
  entry.rate = std::clamp(std::log2(d0 / d1), 0.5, 4.0);
  const double factor = std::exp2(entry.rate);
  entry.value = v2 - d1 / (factor - 1.0);
  const double companion = v2 - d1 / 3.0;
  entry.error = std::max({std::fabs(entry.value - companion), 0.05 * d1,
                          1e-12 * std::fabs(entry.value)});
  return entry;
}

}  // namespace detail

// Eigenvalues of the triangle extrapolated across refinement levels.  The
// constant mode is pinned to zero; every other eigenvalue gets the fitted
// Richardson step from the three finest levels.  Estimates are heuristic,
// not rigorous bounds.
inline Spectrum solve_extrapolated(const TriangleDomain& t, int count,
                                   const std::vector<int>& levels,
                                   const SolveOptions& opt = {},
                                   ExtrapolationReport* report = nullptr) {
  if (levels.size() < 3)
    throw std::domain_error("solve_extrapolated: need at least 3 levels");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1])
      throw std::domain_error("solve_extrapolated: levels must be strictly increasing");

  std::vector<std::vector<double>> values;
  for (int level : levels) {
    const EigenSolveResult r = solve_neumann(mesh(t, level), count, opt);
    values.push_back(r.spectrum.values);
  }
  const std::size_t last = levels.size() - 1;

  Spectrum s;
  s.provenance = Provenance::extrapolated;
  s.values.resize(static_cast<std::size_t>(count));
  s.error_estimates.resize(static_cast<std::size_t>(count));
  if (report) {
    report->levels = levels;
    report->entries.resize(static_cast<std::size_t>(count));
    report->level_values = values;
  }
  for (int j = 0; j < count; ++j) {
    ExtrapolationEntry entry;
    if (j == 0) {
      // the zero eigenvalue of the constant mode is known exactly
      entry.value = 0.0;
      entry.error = std::fabs(values[last][0]);
    } else {
      entry = detail::richardson(values[last - 2][static_cast<std::size_t>(j)],
                                 values[last - 1][static_cast<std::size_t>(j)],
                                 values[last][static_cast<std::size_t>(j)]);
    }
    s.values[static_cast<std::size_t>(j)] = entry.value;
    s.error_estimates[static_cast<std::size_t>(j)] = entry.error;
    if (report) report->entries[static_cast<std::size_t>(j)] = entry;
  }
  return s;
}

struct GradientRatios {
  int n = 0;
  double y_fraction = 0.0;      // share of the gradient energy in y
  double cross_fraction = 0.0;  // normalized x.y cross energy
  bool eigenspace_complete = false;
};

// Gradient-energy ratios of the first n eigenfunctions, from the
// element-wise constant P1 gradients.  The values are basis-independent only
// when index n does not split a degenerate eigenspace; the flag reports
// whether the gap above mu_n clears the degeneracy tolerance (1e-6
// relative), which requires the solve to carry at least n+1 pairs.
inline GradientRatios gradient_ratios(const EigenSolveResult& r, int n) {
  if (n < 2) throw std::domain_error("gradient_ratios: n must be >= 2");
  if (n > r.spectrum.size())
    throw std::out_of_range("gradient_ratios: result has fewer than n pairs");

  double energy_x = 0.0, energy_y = 0.0, energy_xy = 0.0;
  const Mesh& m = r.mesh;
  for (const auto& e : m.elements) {
    const Point p0 = m.nodes[static_cast<std::size_t>(e[0])];
    const Point p1 = m.nodes[static_cast<std::size_t>(e[1])];
    const Point p2 = m.nodes[static_cast<std::size_t>(e[2])];
    const double area2 = cross(p1 - p0, p2 - p0);
    const double area = 0.5 * std::fabs(area2);
    const double gx[3] = {(p1.y - p2.y) / area2, (p2.y - p0.y) / area2,
                          (p0.y - p1.y) / area2};
    const double gy[3] = {(p2.x - p1.x) / area2, (p0.x - p2.x) / area2,
                          (p1.x - p0.x) / area2};
    for (int j = 0; j < n; ++j) {
      double ux = 0.0, uy = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double c = r.vectors(e[i], j);
        ux += c * gx[i];
        uy += c * gy[i];
      }
      energy_x += area * ux * ux;
      energy_y += area * uy * uy;
      energy_xy += area * ux * uy;
    }
  }
  GradientRatios out;
  out.n = n;
  const double total = energy_x + energy_y;
  out.y_fraction = energy_y / total;
  out.cross_fraction = energy_xy / total;
  if (n < r.spectrum.size()) {
    const double mu_n = r.spectrum.value(n);
    const double mu_next = r.spectrum.value(n + 1);
    out.eigenspace_complete = (mu_next - mu_n) > 1e-6 * std::max(mu_next, 1e-300);
  }
  return out;
}

}  // namespace trieig
