#include "binform/identities.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace binform {
namespace {

TEST(Identities, SinProductSides) {
  const auto [lhs, rhs] = sin_product_sides(5, 0.3);
  EXPECT_NEAR(lhs, std::sin(1.5), 1e-15);
  EXPECT_NEAR(lhs, rhs, 1e-13);
}

TEST(Identities, ChebyshevRecurrenceValues) {
  EXPECT_DOUBLE_EQ(chebyshev_u(0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(chebyshev_u(1, 0.3), 0.6);
  EXPECT_NEAR(chebyshev_u(2, 0.3), 4 * 0.09 - 1, 1e-15);
  EXPECT_NEAR(chebyshev_u(3, 0.5), -1.0, 1e-15);  // sin(4 pi/3) / sin(pi/3)
}

TEST(Identities, SuitesPassAtModerateDegree) {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    EXPECT_TRUE(check_sin_product_identity(n, 200).within(1e-10)) << n;
    EXPECT_TRUE(check_chebyshev_sine(n, 200).within(1e-10)) << n;
  }
  for (std::uint64_t n = 2; n <= 24; ++n) {
    EXPECT_TRUE(check_chebyshev_product(n, 200).within(1e-10)) << n;
    EXPECT_TRUE(check_leading_coefficient(n).within(1e-12)) << n;
  }
}

TEST(Identities, SeedDeterminism) {
  const auto a = check_sin_product_identity(17, 300, 9);
  const auto b = check_sin_product_identity(17, 300, 9);
  EXPECT_EQ(a.max_rel_residual, b.max_rel_residual);
  EXPECT_EQ(a.samples, 300);
}

}  // namespace
}  // namespace binform
