#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trieig/counting.hpp"
#include "trieig/exact.hpp"
#include "trieig/geometry.hpp"
#include "trieig/spectrum.hpp"

namespace trieig {

// Chosen comparison constant for the endpoint-triangle argument.
inline constexpr double kComparisonConstant = 0.967;

// Margins smaller than this are reported as indeterminate rather than
// attributed to either side: the underlying condition is strict.
inline constexpr double kIndeterminateBand = 1e-10;

// One application of the linear-transformation condition: transplanting the
// unknown eigenfunctions of the source triangle T(a,b) onto the target
// T(c,d) proves M_n(a,b) > C * M_n(c,d) whenever lhs < rhs below.
struct MutfReport {
  Point source_apex;        // (a, b)
  Point target_apex;        // (c, d)
  double scale = 0.0;       // C
  double y_fraction = 0.0;      // gradient-energy share in y of the source
  double cross_fraction = 0.0;  // normalized x.y cross energy of the source
  double lhs = 0.0;
  double rhs = 0.0;         // 1 / C
  double margin = 0.0;      // rhs - lhs
  bool pass = false;        // margin > 0 outside the indeterminate band
  bool indeterminate = false;
};

inline MutfReport transformation_condition(Point source_apex, Point target_apex,
                                           double scale, double y_fraction,
                                           double cross_fraction) {
  if (!(source_apex.y > 0.0) || !(target_apex.y > 0.0))
    throw std::domain_error("transformation_condition: apex heights must be positive");
  if (!(scale > 0.0))
    throw std::domain_error("transformation_condition: scale must be positive");
  if (!(y_fraction >= 0.0 && y_fraction <= 1.0))
    throw std::domain_error("transformation_condition: y_fraction must lie in [0, 1]");

  const double a = source_apex.x, b = source_apex.y;
  const double c = target_apex.x, d = target_apex.y;
  MutfReport r;
  r.source_apex = source_apex;
  r.target_apex = target_apex;
  r.scale = scale;
  r.y_fraction = y_fraction;
  r.cross_fraction = cross_fraction;
  r.lhs = (((a - c) * (a - c) + d * d) * (1.0 - y_fraction) +
           2.0 * b * (a - c) * cross_fraction + b * b * y_fraction) /
          (d * d);
  r.rhs = 1.0 / scale;
  r.margin = r.rhs - r.lhs;
  r.indeterminate = std::fabs(r.margin) < kIndeterminateBand;
  r.pass = r.margin > 0.0 && !r.indeterminate;
  return r;
}

enum class Branch { none, equilateral, right_plus, right_minus };

// Applies the condition from the subequilateral source T(0, b) to the two
// reference targets: the equilateral triangle with C = 4/(1+b^2), and the
// right triangles with C = factor * 16/(1+b^2).  Either sign of the right
// apex may be used since both right triangles share one spectrum, so the
// more favorable cross term wins.
struct FrameReport {
  double apex_height = 0.0;
  MutfReport to_equilateral;
  MutfReport to_right_plus;
  MutfReport to_right_minus;
  Branch passing = Branch::none;
  bool pass = false;
};

inline FrameReport reference_branch_check(double apex_height, double y_fraction,
                                          double cross_fraction,
                                          double right_factor = 6.0 / 11.0) {
  const double s3 = std::sqrt(3.0);
  if (!(apex_height > s3))
    throw std::domain_error("reference_branch_check: apex height must exceed sqrt(3)");
  FrameReport rep;
  rep.apex_height = apex_height;
  const double d2 = 1.0 + apex_height * apex_height;
  rep.to_equilateral = transformation_condition(
      {0.0, apex_height}, {0.0, s3}, 4.0 / d2, y_fraction, cross_fraction);
  rep.to_right_plus = transformation_condition(
      {0.0, apex_height}, {1.0, 2.0 * s3}, right_factor * 16.0 / d2,
      y_fraction, cross_fraction);
  rep.to_right_minus = transformation_condition(
      {0.0, apex_height}, {-1.0, 2.0 * s3}, right_factor * 16.0 / d2,
      y_fraction, cross_fraction);
  if (rep.to_equilateral.pass) {
    rep.passing = Branch::equilateral;
  } else if (rep.to_right_plus.pass || rep.to_right_minus.pass) {
    rep.passing = rep.to_right_plus.margin >= rep.to_right_minus.margin
                      ? Branch::right_plus
                      : Branch::right_minus;
  }
  rep.pass = rep.passing != Branch::none;
  return rep;
}

// Apex height below which the right-triangle branch can fail at the given
// y-energy fraction: sqrt(13 - 19/(6 - 5 gamma)).  NaN when the radicand is
// negative (no constraint).
inline double right_branch_height_bound(double y_fraction) {
  const double radicand = 13.0 - 19.0 / (6.0 - 5.0 * y_fraction);
  return std::sqrt(radicand);  // NaN propagates for radicand < 0
}

// Supremum of the right-branch height bound over y-energy fractions in
// [3/4, 1]; the bound decreases there, so the supremum sits at 3/4.
inline double worst_case_height_bound() { return right_branch_height_bound(0.75); }

// Admissibility of the endpoint comparison constant: K must stay below
// closed-form quotient at every source height in (sqrt(3), b*), and the full
// condition must hold over the (y_fraction, height) rectangle.
struct EndpointConstantReport {
  double endpoint_height = 0.0;  // b*
  double constant = 0.0;         // K
  double quotient_at_sqrt3 = 0.0;
  bool increasing_in_height = false;
  bool constant_admissible = false;  // K < quotient at sqrt(3)
  bool condition_holds = false;      // grid scan of the full condition
  double condition_min_margin = 0.0;
  bool pass = false;
};

inline EndpointConstantReport endpoint_constant_check(double endpoint_height,
                                                      double constant,
                                                      int grid = 200) {
  const double s3 = std::sqrt(3.0);
  if (!(endpoint_height > s3))
    throw std::domain_error("endpoint_constant_check: endpoint height must exceed sqrt(3)");
  if (!(constant > 0.0 && constant < 1.0))
    throw std::domain_error("endpoint_constant_check: constant must lie in (0, 1)");

  const double bs2 = endpoint_height * endpoint_height;
  auto quotient = [&](double b) {
    const double b2 = b * b;
    return 4.0 * bs2 / (3.0 * (bs2 + 1.0)) * (b2 + 1.0) / (b2 + bs2 / 3.0);
  };

  EndpointConstantReport rep;
  rep.endpoint_height = endpoint_height;
  rep.constant = constant;
  rep.quotient_at_sqrt3 = quotient(s3);
  rep.constant_admissible = constant < rep.quotient_at_sqrt3;

  rep.increasing_in_height = bs2 / 3.0 > 1.0;
  double prev = rep.quotient_at_sqrt3;
  for (int i = 1; i <= grid; ++i) {
    const double b = s3 + (endpoint_height - s3) * i / grid;
    const double q = quotient(b);
    if (q < prev) rep.increasing_in_height = false;
    prev = q;
  }

  // full condition: 1 - g + (b^2/b*^2) g < (1/K) (b^2+1)/(b*^2+1); the left
  // side is largest at g = 3/4 since b < b*
  rep.condition_min_margin = std::numeric_limits<double>::infinity();
  rep.condition_holds = true;
  for (int gi = 0; gi <= grid; ++gi) {
    const double g = 0.75 + 0.25 * gi / grid;
    for (int bi = 0; bi <= grid; ++bi) {
      const double b = s3 + (endpoint_height - s3) * bi / grid;
      const double lhs = 1.0 - g + (b * b / bs2) * g;
      const double rhs = (b * b + 1.0) / (bs2 + 1.0) / constant;
      const double margin = rhs - lhs;
      if (margin < rep.condition_min_margin) rep.condition_min_margin = margin;
      if (!(margin > 0.0)) rep.condition_holds = false;
    }
  }
  rep.pass = rep.constant_admissible && rep.increasing_in_height && rep.condition_holds;
  return rep;
}

namespace detail {

// round-half-up at two decimals, nudged up if still below the true value
inline double round_up_cents(double x) {
  double r = std::floor(x * 100.0 + 0.5) / 100.0;
  if (r < x - 1e-9) r += 0.01;
  return r;
}

}  // namespace detail

// Certification thresholds (1/K) M_n D^2 of the equilateral triangle for the
// indices whose comparison argument needs the endpoint triangle.
struct ThresholdTable {
  double constant = 0.0;  // K
  std::map<int, double> entries;
};

inline constexpr int kExceptionalIndices[] = {4, 5, 7, 8, 9};

inline ThresholdTable exceptional_thresholds(double constant) {
  if (!(constant > 0.0 && constant <= 1.0))
    throw std::domain_error("exceptional_thresholds: constant must lie in (0, 1]");
  ThresholdTable table;
  table.constant = constant;
  const auto lattice = equilateral_lattice(16, SymmetryClass::all);
  for (int n : kExceptionalIndices) {
    long long multiples = 0;
    for (int j = 2; j <= n; ++j) multiples += lattice[static_cast<std::size_t>(j - 1)].k;
    const double sum = kEquilateralUnit * static_cast<double>(multiples);
    table.entries[n] = detail::round_up_cents(sum / constant);
  }
  return table;
}

// Certified comparison of the computed endpoint-triangle sums against the
// thresholds.  Because the extrapolated error estimates are heuristic, a
// margin of three times the accumulated estimate is required.
struct ExceptionalReport {
  struct Row {
    int n = 0;
    double normalized_sum = 0.0;  // M_n D^2
    double error = 0.0;           // accumulated error estimate, times D^2
    double threshold = 0.0;       // 0 for informational rows
    bool required = false;        // in the exceptional index set
    bool certified = false;
  };
  std::vector<Row> rows;
  bool all_pass = false;
};

inline ExceptionalReport verify_exceptional(const Spectrum& endpoint_spectrum,
                                            double endpoint_diameter,
                                            const ThresholdTable& table) {
  if (table.entries.empty())
    throw std::domain_error("verify_exceptional: empty threshold table");
  const int max_n = table.entries.rbegin()->first;
  if (!endpoint_spectrum.has_error_estimates() ||
      static_cast<int>(endpoint_spectrum.error_estimates.size()) < max_n)
    throw std::domain_error(
        "verify_exceptional: refusing to certify without error estimates");

  const double d2 = endpoint_diameter * endpoint_diameter;
  ExceptionalReport rep;
  rep.all_pass = true;
  for (int n = table.entries.begin()->first; n <= max_n; ++n) {
    ExceptionalReport::Row row;
    row.n = n;
    row.normalized_sum = eigenvalue_sum(endpoint_spectrum, n) * d2;
    row.error = eigenvalue_sum_error(endpoint_spectrum, n) * d2;
    const auto it = table.entries.find(n);
    row.required = it != table.entries.end();
    if (row.required) {
      row.threshold = it->second;
      row.certified = row.normalized_sum - 3.0 * row.error > row.threshold;
      if (!row.certified) rep.all_pass = false;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// The right-triangle spectrum is the symmetric half of the equilateral one,
// so the comparison between their diameter-normalized sums reduces to the
// exact symmetric/full ratio for n <= 200 and to the counting bounds beyond.
struct ComparisonReport {
  bool exact_part = false;       // ratio lemma index sets up to 200
  bool termwise_shortcut = false;  // mu_j^s > 11/6 mu_j for 28 <= j <= 200
  bool tail = false;             // bound quotient > 11/6 from 193 on
  bool pass = false;
  std::string detail;
};

inline ComparisonReport right_triangle_comparison_check() {
  ComparisonReport rep;
  const auto rows = ratio_table(200);
  const auto lemma = verify_ratio_lemma(rows);
  rep.exact_part = lemma.pass;
  if (!lemma.pass) {
    rep.detail = "ratio failures at j =";
    for (int j : lemma.failures) rep.detail += " " + std::to_string(j);
  }

  const auto full = equilateral_lattice(200, SymmetryClass::all);
  const auto sym = equilateral_lattice(200, SymmetryClass::symmetric);
  rep.termwise_shortcut = true;
  for (int j = 28; j <= 200; ++j) {
    if (6 * sym[static_cast<std::size_t>(j - 1)].k <=
        11 * full[static_cast<std::size_t>(j - 1)].k) {
      rep.termwise_shortcut = false;
      break;
    }
  }

  const auto tail = verify_tail_ratio(193, 1'000'000);
  rep.tail = tail.all_exceed;
  rep.pass = rep.exact_part && rep.termwise_shortcut && rep.tail;
  return rep;
}

}  // namespace trieig
