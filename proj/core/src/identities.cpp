#include "binform/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "binform/errors.hpp"

namespace binform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_samples(long samples) {
  if (samples < 1) {
    throw DomainError("identity checks need at least one sample");
  }
}

// Both sides are evaluated in long double: near the zeros of sin(n t) the
// relative residual is dominated by rounding of the arguments, and n t is
// exact in the 64-bit mantissa for double t and n < 2^11.
using Wide = long double;

constexpr Wide kPiWide = std::numbers::pi_v<long double>;

void record(IdentityReport& report, Wide lhs, Wide rhs) {
  const Wide abs_residual = std::abs(lhs - rhs);
  const Wide scale = std::max(std::abs(lhs), std::abs(rhs));
  const Wide rel_residual = scale > 0.0L ? abs_residual / scale : 0.0L;
  report.max_abs_residual = std::max(report.max_abs_residual, static_cast<double>(abs_residual));
  report.max_rel_residual = std::max(report.max_rel_residual, static_cast<double>(rel_residual));
  ++report.samples;
}

Wide kth_angle(std::uint64_t k, std::uint64_t n) {
  return static_cast<Wide>(k) * kPiWide / static_cast<Wide>(n);
}

std::pair<Wide, Wide> sin_product_wide(std::uint64_t n, Wide theta) {
  Wide product = std::ldexp(1.0L, static_cast<int>(n) - 1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    product *= std::sin(kth_angle(k, n) - theta);
  }
  return {std::sin(static_cast<Wide>(n) * theta), product};
}

Wide chebyshev_u_wide(std::uint64_t m, Wide x) {
  Wide previous = 1.0L;
  if (m == 0) {
    return previous;
  }
  Wide current = 2.0L * x;
  for (std::uint64_t k = 1; k < m; ++k) {
    const Wide next = 2.0L * x * current - previous;
    previous = current;
    current = next;
  }
  return current;
}

Wide chebyshev_u_product_wide(std::uint64_t n, Wide x) {
  Wide product = std::ldexp(1.0L, static_cast<int>(n) - 1);
  for (std::uint64_t k = 1; k < n; ++k) {
    product *= x - std::cos(kth_angle(k, n));
  }
  return product;
}

}  // namespace

std::pair<double, double> sin_product_sides(std::uint64_t n, double theta) {
  if (n == 0) {
    throw DomainError("sin product identity requires n >= 1");
  }
  const auto [lhs, rhs] = sin_product_wide(n, theta);
  return {static_cast<double>(lhs), static_cast<double>(rhs)};
}

IdentityReport check_sin_product_identity(std::uint64_t n, long samples, std::uint64_t seed) {
  require_samples(samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  IdentityReport report{"sin-product n=" + std::to_string(n)};
  for (long i = 0; i < samples; ++i) {
    if (n == 0) {
      throw DomainError("sin product identity requires n >= 1");
    }
    const auto [lhs, rhs] = sin_product_wide(n, angle(rng));
    record(report, lhs, rhs);
  }
  return report;
}

double chebyshev_u(std::uint64_t m, double x) {
  double previous = 1.0;
  if (m == 0) {
    return previous;
  }
  double current = 2.0 * x;
  for (std::uint64_t k = 1; k < m; ++k) {
    const double next = 2.0 * x * current - previous;
    previous = current;
    current = next;
  }
  return current;
}


double chebyshev_u_product(std::uint64_t n, double x) {
  if (n < 1) {
    throw DomainError("chebyshev product requires n >= 1");
  }
  return static_cast<double>(chebyshev_u_product_wide(n, x));
}

IdentityReport check_chebyshev_product(std::uint64_t n, long samples, std::uint64_t seed) {
  if (n < 2) {
    throw DomainError("chebyshev product check requires n >= 2");
  }
  require_samples(samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> point(-1.0, 1.0);
  IdentityReport report{"chebyshev-product n=" + std::to_string(n)};
  for (long i = 0; i < samples; ++i) {
    const double x = point(rng);
    record(report, chebyshev_u_wide(n - 1, x), chebyshev_u_product_wide(n, x));
  }
  return report;
}

IdentityReport check_chebyshev_sine(std::uint64_t n, long samples, std::uint64_t seed) {
  if (n < 1) {
    throw DomainError("chebyshev sine check requires n >= 1");
  }
  require_samples(samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  IdentityReport report{"chebyshev-sine n=" + std::to_string(n)};
  for (long i = 0; i < samples; ++i) {
    const Wide t = angle(rng);
    record(report, chebyshev_u_wide(n - 1, std::cos(t)) * std::sin(t),
           std::sin(static_cast<Wide>(n) * t));
  }
  return report;
}

IdentityReport check_leading_coefficient(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("leading coefficient check requires n >= 2");
  }
  Wide product = 1.0L;
  for (std::uint64_t k = 1; k < n; ++k) {
    product *= std::sin(kth_angle(k, n));
  }
  IdentityReport report{"leading-coefficient n=" + std::to_string(n)};
  record(report, product, static_cast<Wide>(n) * std::ldexp(1.0L, 1 - static_cast<int>(n)));
  return report;
}

}  // namespace binform
