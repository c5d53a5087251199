#include "binform/area.hpp"
#include "binform/arith.hpp"
#include "binform/errors.hpp"
#include "binform/forms.hpp"
#include "binform/special.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace binform {
namespace {

// mpmath values at 30 digits of 4^(1-1/n) B(1/2-1/n, 1/2) and
// 4^(nu_2(n)/n) B(1/2-1/n, 1/2) for n = 3..12.
constexpr double kFstarArea[] = {
    18.3594484446863144989583300677, 14.8325974184109753474708027776,
    13.8064896793060767883678583551, 13.3549520942676646147439963482,
    13.113865914567383025001714777,  12.9693357665209956619967843945,
    12.8756397266411497931748435556, 12.8113493482468762224586833197,
    12.7652852685526781662643494212, 12.7311337633229751613139529976};
constexpr double kSnArea[] = {
    7.28595194366274483545982506934, 10.4882302171684792418593583596,
    4.55444308796217206214021432466, 5.29991625085634987194106849894,
    3.99649540231607523136571882593, 6.48466788326049783099839219724,
    3.75495191106169817555469937706, 4.22616920317172904360500613649,
    3.619955732379142816581616385,   4.50113550811934315801178562769};

TEST(BetaIntegral, MatchesClosedForm) {
  for (double x : {0.1, 1.0 / 6.0, 0.25, 0.5, 1.0, 2.5}) {
    for (double y : {0.1, 0.5, 1.0, 3.0}) {
      const auto r = beta_integral(x, y, 1e-12);
      EXPECT_TRUE(r.converged);
      EXPECT_NEAR(r.value / beta_closed(x, y), 1.0, 1e-10) << x << "," << y;
    }
  }
}

TEST(CircleZeros, FstarRootsAreEquallySpaced) {
  for (std::uint64_t n = 3; n <= 12; ++n) {
    const auto z = circle_zeros(fstar_coefficients(n));
    ASSERT_EQ(z.angles.size(), n);
    for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(z.angles[i] - z.angles[i - 1], std::numbers::pi / n, 1e-12);
    for (double a : z.angles) {
      EXPECT_GE(a, z.start);
      EXPECT_LT(a, z.start + std::numbers::pi);
    }
  }
}

TEST(CircleZeros, DefiniteFormHasNone) {
  EXPECT_TRUE(circle_zeros(BinaryForm({1, 0, 1, 0, 1})).angles.empty());
}

TEST(Area, FstarAgainstFrozenValues) {
  for (std::uint64_t n = 3; n <= 12; ++n) {
    const auto f = fstar_coefficients(n);
    const double ref = kFstarArea[n - 3];
    EXPECT_NEAR(area_fstar_closed(n) / ref, 1.0, 1e-13) << n;
    const auto polar = area_polar(f);
    const auto line = area_line(f);
    EXPECT_TRUE(polar.converged && line.converged);
    EXPECT_NEAR(polar.value / ref, 1.0, 1e-10) << n;
    EXPECT_NEAR(line.value / ref, 1.0, 1e-10) << n;
  }
}

TEST(Area, SnAgainstFrozenValues) {
  for (std::uint64_t n = 3; n <= 12; ++n) {
    const double ref = kSnArea[n - 3];
    EXPECT_NEAR(area_sn_closed(n) / ref, 1.0, 1e-13) << n;
    EXPECT_NEAR(area_polar(sn_coefficients(n)).value / ref, 1.0, 1e-10) << n;
    EXPECT_NEAR(area_line(sn_coefficients(n)).value / ref, 1.0, 1e-10) << n;
  }
}

TEST(Area, DefiniteQuartic) {
  // X^4 + Y^4: integral_R (1 + x^4)^(-1/2) dx = B(1/4, 1/4) / 2.
  const double expected = std::exp(2 * log_gamma(0.25)) / (2 * std::sqrt(std::numbers::pi));
  const BinaryForm f({1, 0, 0, 0, 1});
  EXPECT_NEAR(area_polar(f).value / expected, 1.0, 1e-10);
  EXPECT_NEAR(area_line(f).value / expected, 1.0, 1e-10);
}

TEST(Area, ScalingLawProperty) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t n = 3 + i % 6;
    const auto f = fstar_coefficients(n);
    const auto c = oracle::random_dyadic(rng, 255, 8);
    const double expected = std::pow(std::abs(c.get_d()), -2.0 / n) * area_polar(f).value;
    EXPECT_NEAR(area_polar(scale(f, c)).value / expected, 1.0, 1e-9);
  }
}

TEST(Area, UnimodularInvarianceProperty) {
  const auto f = sn_coefficients(5);
  const double a = area_polar(f).value;
  for (int t = -3; t <= 3; ++t) {
    const auto g = substitute_unimodular(f, UnimodularMatrix{1, t, 0, 1});
    EXPECT_NEAR(area_polar(g).value / a, 1.0, 1e-9) << t;
    EXPECT_NEAR(area_line(g).value / a, 1.0, 1e-9) << t;
  }
}

TEST(Area, DomainErrors) {
  EXPECT_THROW(area_polar(fstar_coefficients(2)), DomainError);
  EXPECT_THROW(area_line(fstar_coefficients(2)), DomainError);
  EXPECT_THROW(area_fstar_closed(2), DomainError);
  EXPECT_THROW(area_sn_closed(1), DomainError);
}

TEST(Bean, CubicValue) {
  EXPECT_NEAR(bean_invariant(fstar_coefficients(3)), 15.8997487525690496, 1e-9);
  // The invariant is unchanged by scaling.
  EXPECT_NEAR(bean_invariant(sn_coefficients(3)), 15.8997487525690496, 1e-9);
  EXPECT_NEAR(3 * beta_closed(1.0 / 3, 1.0 / 3), 15.8997487525690496, 1e-12);
}

TEST(Bean, HigherDegreesStayBelowCubic) {
  for (std::uint64_t n = 4; n <= 12; ++n) EXPECT_LT(bean_invariant(fstar_coefficients(n)), 15.9) << n;
}

TEST(Bean, RepeatedFactorHasNoInvariant) {
  EXPECT_THROW(bean_invariant(BinaryForm({1, 2, 1, 0})), DomainError);
}

}  // namespace
}  // namespace binform
