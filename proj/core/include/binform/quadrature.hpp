#pragma once

#include <functional>

namespace binform {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// A quadrature node together with its distances to both interval ends.
/// The distances are computed directly from the transformation, so they stay
/// accurate when x itself rounds onto an endpoint; integrands with endpoint
/// singularities should be written in terms of them.
struct QuadratureNode {
  double x;
  double from_left;
  double from_right;
};

using EndpointIntegrand = std::function<double(const QuadratureNode&)>;

struct TanhSinhOptions {
  int max_level = 12;
  int min_level = 3;
};

/// Double-exponential (tanh-sinh) quadrature on [a, b]. The integrand is never
/// evaluated at a or b. Each level halves the step; the difference between
/// successive levels is the error estimate, and the result is converged once
/// that estimate drops below tol * max(1, |value|). Non-finite integrand
/// values mark the result as not converged.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double tol,
                           const TanhSinhOptions& options = {});

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           const TanhSinhOptions& options = {});

/// Sums panel results: values and error estimates add, evaluations add,
/// convergence requires every panel to converge.
QuadratureResult accumulate(const QuadratureResult& lhs, const QuadratureResult& rhs);

}  // namespace binform
