#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "trieig/counting.hpp"
#include "trieig/exact.hpp"

using namespace trieig;
using Catch::Matchers::WithinAbs;

namespace {

// independent O(R^2) double-loop oracle
long long brute_count(double mu, SymmetryClass cls) {
  const double threshold = 9.0 * mu / (16.0 * std::numbers::pi * std::numbers::pi);
  const int cap = static_cast<int>(std::sqrt(threshold)) + 2;
  long long count = 0;
  for (int m = 0; m <= cap; ++m)
    for (int n = 0; n <= cap; ++n)
      if (in_symmetry_class(cls, m, n) &&
          static_cast<double>(lattice_norm(m, n)) < threshold)
        ++count;
  return count;
}

}  // namespace

TEST_CASE("counting function spot values") {
  CHECK(counting_function(1.0, SymmetryClass::all) == 1);  // only (0,0)
  const double probe = kCountingValidityThreshold + 1.0;
  CHECK(counting_function(probe, SymmetryClass::all) == 22);
  CHECK(counting_function(probe, SymmetryClass::symmetric) == 13);
  CHECK(counting_function(0.0, SymmetryClass::all) == 0);
  CHECK_THROWS_AS(counting_function(-1.0, SymmetryClass::all), std::domain_error);
}

TEST_CASE("counting function matches brute force") {
  for (double mu : {50.0, 333.3, 1234.5, 9876.1, 123456.7}) {
    for (auto cls : {SymmetryClass::all, SymmetryClass::symmetric,
                     SymmetryClass::antisymmetric})
      CHECK(counting_function(mu, cls) == brute_count(mu, cls));
  }
  // classes add up
  for (double mu : {100.1, 5000.3}) {
    CHECK(counting_function(mu, SymmetryClass::symmetric) +
              counting_function(mu, SymmetryClass::antisymmetric) ==
          counting_function(mu, SymmetryClass::all));
  }
}

TEST_CASE("counting tie guard") {
  // thresholds sitting exactly on a lattice eigenvalue are refused
  CHECK_THROWS_AS(counting_function(kEquilateralUnit * 7.0, SymmetryClass::all),
                  TieWarning);
  // rational offsets used throughout the checks never tie
  CHECK_NOTHROW(counting_function(kCountingValidityThreshold + 1.0, SymmetryClass::all));
}

TEST_CASE("counting bounds") {
  const double probe = kCountingValidityThreshold + 1.0;
  const auto all = counting_bounds(probe, SymmetryClass::all);
  REQUIRE(all.lower.has_value());
  CHECK(all.upper > 22.0);
  CHECK(all.upper < 26.0);
  CHECK(*all.lower < 22.0);

  const auto sym = counting_bounds(probe, SymmetryClass::symmetric);
  CHECK_FALSE(sym.lower.has_value());
  CHECK(sym.upper > 13.0);
  CHECK(sym.upper < 15.0);

  const auto big = counting_bounds(1e6, SymmetryClass::all);
  const long long exact = counting_function(1e6, SymmetryClass::all);
  CHECK(*big.lower < static_cast<double>(exact));
  CHECK(static_cast<double>(exact) < big.upper);

  CHECK_THROWS_AS(counting_bounds(kCountingValidityThreshold, SymmetryClass::all),
                  std::domain_error);
  CHECK_THROWS_AS(counting_bounds(1e6, SymmetryClass::antisymmetric),
                  std::domain_error);
}

TEST_CASE("counting sandwich over a log grid") {
  const double lo = kCountingValidityThreshold;
  for (int i = 1; i <= 50; ++i) {
    const double mu = lo * std::pow(1e7 / lo, i / 50.0);
    const auto b = counting_bounds(mu, SymmetryClass::all);
    const long long n = counting_function(mu, SymmetryClass::all);
    CHECK(*b.lower < static_cast<double>(n));
    CHECK(static_cast<double>(n) < b.upper);
    CHECK(*b.lower < b.upper);

    const auto bs = counting_bounds(mu, SymmetryClass::symmetric);
    const long long ns = counting_function(mu, SymmetryClass::symmetric);
    CHECK(static_cast<double>(ns) < bs.upper);

    // the diagonal m = n contributes at most R/sqrt(3) + 1 pairs
    const double radius = 3.0 * std::sqrt(mu) / (4.0 * std::numbers::pi);
    CHECK(2.0 * static_cast<double>(ns) <=
          static_cast<double>(n) + radius / std::sqrt(3.0) + 1.0);
  }
}

TEST_CASE("index bounds") {
  const auto b26 = invert_bounds(26, SymmetryClass::all);
  REQUIRE(b26.upper.has_value());
  // frozen from direct evaluation of the closed forms
  CHECK_THAT(b26.lower, WithinAbs(492.3139393393079, 1e-6));
  CHECK_THAT(*b26.upper, WithinAbs(665.8357566191203, 1e-6));
  const double mu26 = kEquilateralUnit * 31.0;  // exact enumeration gives k = 31
  CHECK_THAT(mu26, WithinAbs(543.9248647711469, 1e-9));
  CHECK(b26.lower <= mu26);
  CHECK(mu26 < *b26.upper);

  const auto s15 = invert_bounds(15, SymmetryClass::symmetric);
  CHECK_FALSE(s15.upper.has_value());
  const auto sym = equilateral_lattice(15, SymmetryClass::symmetric);
  const double mu15s = kEquilateralUnit * static_cast<double>(sym[14].k);
  CHECK(s15.lower <= mu15s);

  CHECK_THROWS_AS(invert_bounds(25, SymmetryClass::all), std::domain_error);
  CHECK_THROWS_AS(invert_bounds(14, SymmetryClass::symmetric), std::domain_error);
}

TEST_CASE("inversion soundness across the table range") {
  const auto full = equilateral_lattice(200, SymmetryClass::all);
  const auto sym = equilateral_lattice(200, SymmetryClass::symmetric);
  for (int j = 26; j <= 200; ++j) {
    const double mu = kEquilateralUnit * static_cast<double>(full[static_cast<std::size_t>(j - 1)].k);
    const auto b = invert_bounds(j, SymmetryClass::all);
    CHECK(b.lower > kCountingValidityThreshold);
    CHECK(b.lower <= mu);
    CHECK(mu < *b.upper);
  }
  for (int j = 15; j <= 200; ++j) {
    const double mu = kEquilateralUnit * static_cast<double>(sym[static_cast<std::size_t>(j - 1)].k);
    CHECK(invert_bounds(j, SymmetryClass::symmetric).lower <= mu);
  }
}

TEST_CASE("counting function is consistent with the inversion argument") {
  const auto full = equilateral_lattice(200, SymmetryClass::all);
  for (int j : {26, 50, 100, 200}) {
    const double mu = kEquilateralUnit * static_cast<double>(full[static_cast<std::size_t>(j - 1)].k);
    CHECK(counting_function(mu * (1.0 + 1e-9), SymmetryClass::all) >= j);
    CHECK(counting_function(mu * (1.0 - 1e-9), SymmetryClass::all) <= j - 1);
  }
}

TEST_CASE("tail ratio") {
  CHECK(tail_quotient(193) > 11.0 / 6.0);

  const auto rep = verify_tail_ratio(193, 100000);
  CHECK(rep.all_exceed);
  CHECK(rep.min_quotient > 11.0 / 6.0);
  CHECK(rep.eventually_monotone);

  CHECK(tail_quotient(1000) > 11.0 / 6.0);
  const double far = tail_quotient(1000000);
  CHECK(far > 11.0 / 6.0);
  CHECK(std::fabs(far - 2.0) < 0.02);  // within 1 percent of 2

  CHECK_THROWS_AS(verify_tail_ratio(100, 1000), std::domain_error);
  CHECK_THROWS_AS(verify_tail_ratio(193, 192), std::domain_error);
}
