#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace binform {

/// Worst residuals of a named identity over a batch of sampled inputs.
struct IdentityReport {
  std::string identity_name;
  long samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;

  bool within(double rel_tol) const { return max_rel_residual <= rel_tol; }
};

/// Both sides of sin(n t) = 2^(n-1) prod_{k=1..n} sin(k pi/n - t).
std::pair<double, double> sin_product_sides(std::uint64_t n, double theta);

/// Samples theta uniformly in [0, 2 pi) with a seeded mt19937_64.
IdentityReport check_sin_product_identity(std::uint64_t n, long samples, std::uint64_t seed = 42);

/// U_m(x) by U_0 = 1, U_1 = 2x, U_{m+1} = 2x U_m - U_{m-1}.
double chebyshev_u(std::uint64_t m, double x);

/// U_{n-1}(x) as 2^(n-1) prod_{k=1..n-1} (x - cos(k pi/n)).
double chebyshev_u_product(std::uint64_t n, double x);

/// Recurrence against product form of U_{n-1} at x uniform in [-1, 1].
IdentityReport check_chebyshev_product(std::uint64_t n, long samples, std::uint64_t seed = 42);

/// U_{n-1}(cos t) sin t against sin(n t) at t uniform in [0, 2 pi).
IdentityReport check_chebyshev_sine(std::uint64_t n, long samples, std::uint64_t seed = 42);

/// prod_{k=1..n-1} sin(k pi/n) against n 2^(1-n); a single deterministic sample.
IdentityReport check_leading_coefficient(std::uint64_t n);

}  // namespace binform
