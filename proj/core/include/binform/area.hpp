#pragma once

#include <cstdint>
#include <vector>

#include "binform/binary_form.hpp"
#include "binform/quadrature.hpp"

namespace binform {

inline constexpr double kDefaultAreaTolerance = 1e-10;

/// Trigonometric form of the beta function,
/// 2 * integral_0^{pi/2} sin^(2x-1) cos^(2y-1), by tanh-sinh quadrature.
QuadratureResult beta_integral(double x, double y, double tol = kDefaultAreaTolerance);

/// Real projective zeros of f as angles theta with f(cos theta, sin theta) = 0,
/// sorted and lying in a half-open window [start, start + pi) whose start is
/// the scan point of largest |f|. Located by a sign-change scan on a
/// 4096-point grid followed by bisection.
struct CircleZeros {
  double start = 0.0;
  std::vector<double> angles;
};
CircleZeros circle_zeros(const BinaryForm& f);

/// Area of |f(x, y)| <= 1 from the polar formula
/// (1/2) integral_0^{2 pi} |f(cos t, sin t)|^(-2/n) dt, split at the circle
/// zeros so each panel is singular only at its ends. Throws DomainError for
/// degree < 3.
QuadratureResult area_polar(const BinaryForm& f, double tol = kDefaultAreaTolerance);

/// Area from the line formula integral_R |f(x, 1)|^(-2/n) dx, mapped to
/// (-pi/2, pi/2) by x = tan u and split at the real roots of f(x, 1). Throws
/// DomainError for degree < 3.
QuadratureResult area_line(const BinaryForm& f, double tol = kDefaultAreaTolerance);

/// 4^(1 - 1/n) B(1/2 - 1/n, 1/2). Throws DomainError for n < 3.
double area_fstar_closed(std::uint64_t n);

/// 4^(nu_2(n)/n) B(1/2 - 1/n, 1/2). Throws DomainError for n < 3.
double area_sn_closed(std::uint64_t n);

/// |D_f|^(1/(n(n-1))) * A_f with the exact discriminant and the polar area.
/// Throws DomainError for degree < 3 or a zero discriminant, and
/// ConvergenceError if the area quadrature fails.
double bean_invariant(const BinaryForm& f, double tol = kDefaultAreaTolerance);

}  // namespace binform
