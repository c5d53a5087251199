#include "binform/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "binform/errors.hpp"

namespace binform {

namespace {

// Largest |t| used: there 1 - |tanh(pi/2 sinh t)| is about 1e-300, the limit
// below which endpoint distances lose meaning in double precision.
const double kTMax = std::asinh(std::log(2.0e300) / std::numbers::pi);

struct Accumulator {
  const EndpointIntegrand& f;
  double a;
  double b;
  double mid;
  double half;
  long evaluations = 0;
  bool finite = true;

  // Contribution of the symmetric pair of nodes at +-t (or the centre at t = 0).
  double pair(double t) {
    const double v = std::numbers::pi / 2.0 * std::sinh(t);
    const double cv = std::cosh(v);
    const double weight = std::numbers::pi / 2.0 * std::cosh(t) / (cv * cv);
    if (t == 0.0) {
      return weight * eval(mid, half, half);
    }
    // 1 - tanh(v) = exp(-v) / cosh(v), accurate for large v.
    const double complement = std::exp(-v) / cv;
    const double near = half * complement;
    const double far = 2.0 * half - near;
    return weight * (eval(b - near, far, near) + eval(a + near, near, far));
  }

  double eval(double x, double from_left, double from_right) {
    ++evaluations;
    const double y = f(QuadratureNode{x, from_left, from_right});
    if (!std::isfinite(y)) {
      finite = false;
      return 0.0;
    }
    return y;
  }
};

}  // namespace

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double tol,
                           const TanhSinhOptions& options) {
  if (!(a < b)) {
    throw DomainError("tanh_sinh requires a < b");
  }
  if (!(tol > 0.0)) {
    throw DomainError("tanh_sinh requires a positive tolerance");
  }
  Accumulator acc{f, a, b, 0.5 * (a + b), 0.5 * (b - a)};

  // Level 0: unit step over [-kTMax, kTMax].
  double sum = acc.pair(0.0);
  for (double t = 1.0; t <= kTMax; t += 1.0) {
    sum += acc.pair(t);
  }
  double step = 1.0;
  double estimate = acc.half * step * sum;

  QuadratureResult result;
  result.value = estimate;
  result.error_estimate = std::abs(estimate);
  for (int level = 1; level <= options.max_level; ++level) {
    step *= 0.5;
    // New nodes are the odd multiples of the halved step.
    for (double t = step; t <= kTMax; t += 2.0 * step) {
      sum += acc.pair(t);
    }
    const double refined = acc.half * step * sum;
    result.error_estimate = std::abs(refined - estimate);
    result.value = refined;
    estimate = refined;
    if (level >= options.min_level &&
        result.error_estimate <= tol * std::max(1.0, std::abs(refined))) {
      result.converged = true;
      break;
    }
  }
  result.evaluations = acc.evaluations;
  if (!acc.finite) {
    result.converged = false;
  }
  return result;
}

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           const TanhSinhOptions& options) {
  // Nodes that round onto an endpoint are dropped; singular integrands should
  // use the endpoint-distance overload instead.
  const EndpointIntegrand wrapped = [&f, a, b](const QuadratureNode& node) {
    return node.x <= a || node.x >= b ? 0.0 : f(node.x);
  };
  return tanh_sinh(wrapped, a, b, tol, options);
}

QuadratureResult accumulate(const QuadratureResult& lhs, const QuadratureResult& rhs) {
  return {lhs.value + rhs.value, lhs.error_estimate + rhs.error_estimate,
          lhs.evaluations + rhs.evaluations, lhs.converged && rhs.converged};
}

}  // namespace binform
