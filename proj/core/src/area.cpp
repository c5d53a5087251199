#include "binform/area.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "binform/arith.hpp"
#include "binform/errors.hpp"
#include "binform/forms.hpp"
#include "binform/special.hpp"

namespace binform {

namespace {

constexpr int kScanPoints = 4096;
constexpr double kBisectionWidth = 1e-14;

void require_area_degree(std::size_t n) {
  if (n < 3) {
    throw DomainError("area requires degree >= 3 (the region is unbounded for n <= 2)");
  }
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Bisects a bracketed sign change of g down to kBisectionWidth, then keeps
// halving while the midpoint is still representable.
double bisect(const std::function<double(double)>& g, double lo, double hi) {
  int lo_sign = sign_of(g(lo));
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const int s = sign_of(g(mid));
    if (s == 0) {
      return mid;
    }
    if (s == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= kBisectionWidth && iter > 60) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

// Zeros of g on [lo, hi] found by a uniform sign-change scan. g(lo) and
// g(hi) must be nonzero.
std::vector<double> scan_zeros(const std::function<double(double)>& g, double lo, double hi) {
  std::vector<double> zeros;
  const double step = (hi - lo) / kScanPoints;
  double prev_t = lo;
  double prev_v = g(lo);
  bool zero_since_prev = false;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double t = i == kScanPoints ? hi : lo + step * i;
    const double v = g(t);
    if (v == 0.0) {
      zeros.push_back(t);
      zero_since_prev = true;
      continue;
    }
    if (sign_of(v) != sign_of(prev_v) && !zero_since_prev) {
      zeros.push_back(bisect(g, prev_t, t));
    }
    prev_t = t;
    prev_v = v;
    zero_since_prev = false;
  }
  return zeros;
}

// Divides the real form sum_j a_j X^(n-j) Y^j by (s X - c Y). Runs the
// recurrence from whichever end divides by the larger of |s|, |c|.
std::vector<double> deflate(const std::vector<double>& a, double s, double c) {
  const std::size_t n = a.size() - 1;
  std::vector<double> b(n);
  if (std::abs(s) >= std::abs(c)) {
    b[0] = a[0] / s;
    for (std::size_t j = 1; j < n; ++j) {
      b[j] = (a[j] + c * b[j - 1]) / s;
    }
  } else {
    b[n - 1] = -a[n] / c;
    for (std::size_t j = n - 1; j >= 1; --j) {
      b[j - 1] = (s * b[j] - a[j]) / c;
    }
  }
  return b;
}

double evaluate_real(const std::vector<double>& a, double x, double y) {
  double acc = a[0];
  double ypow = 1.0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    ypow *= y;
    acc = acc * x + a[j] * ypow;
  }
  return acc;
}

// Integration panel; an endpoint that is a root records its index.
struct Panel {
  double lo;
  double hi;
  std::optional<std::size_t> lo_root;
  std::optional<std::size_t> hi_root;
};

}  // namespace

QuadratureResult beta_integral(double x, double y, double tol) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("beta requires positive arguments");
  }
  const double px = 2.0 * x - 1.0;
  const double py = 2.0 * y - 1.0;
  // On [0, pi/2]: sin(t) = sin(from_left), cos(t) = sin(from_right).
  const EndpointIntegrand integrand = [px, py](const QuadratureNode& node) {
    return 2.0 * std::pow(std::sin(node.from_left), px) * std::pow(std::sin(node.from_right), py);
  };
  return tanh_sinh(integrand, 0.0, std::numbers::pi / 2.0, tol);
}

CircleZeros circle_zeros(const BinaryForm& f) {
  const auto g = [&f](double t) { return evaluate(f, std::cos(t), std::sin(t)); };
  double start = 0.0;
  double best = -1.0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double t = std::numbers::pi * i / kScanPoints;
    const double v = std::abs(g(t));
    if (v > best) {
      best = v;
      start = t;
    }
  }
  CircleZeros out{start, scan_zeros(g, start, start + std::numbers::pi)};
  // The closing scan point start + pi carries the same |f| as start, so
  // every zero found lies strictly inside the window.
  return out;
}

QuadratureResult area_polar(const BinaryForm& f, double tol) {
  const std::size_t n = f.degree();
  require_area_degree(n);
  const double exponent = -2.0 / static_cast<double>(n);
  const CircleZeros zeros = circle_zeros(f);
  const std::vector<double>& roots = zeros.angles;

  // f(X, Y) = G(X, Y) * prod_k (X sin r_k - Y cos r_k); the factor for r_k at
  // (cos t, sin t) is sin(r_k - t).
  std::vector<double> rest(f.approx().begin(), f.approx().end());
  for (const double r : roots) {
    rest = deflate(rest, std::sin(r), std::cos(r));
  }

  if (roots.empty()) {
    const auto integrand = [&](double t) {
      return std::pow(std::abs(evaluate(f, std::cos(t), std::sin(t))), exponent);
    };
    return tanh_sinh(integrand, zeros.start, zeros.start + std::numbers::pi, tol);
  }

  QuadratureResult total{0.0, 0.0, 0, true};
  const std::size_t count = roots.size();
  for (std::size_t p = 0; p < count; ++p) {
    const std::size_t next = (p + 1) % count;
    const double lo = roots[p];
    const double hi = p + 1 < count ? roots[next] : roots[0] + std::numbers::pi;
    const EndpointIntegrand integrand = [&, p, next](const QuadratureNode& node) {
      const double t = node.x;
      double log_mag = std::log(std::abs(evaluate_real(rest, std::cos(t), std::sin(t))));
      for (std::size_t k = 0; k < count; ++k) {
        double factor;
        if (k == p && k == next) {
          factor = std::sin(std::min(node.from_left, node.from_right));
        } else if (k == p) {
          factor = std::sin(node.from_left);
        } else if (k == next) {
          factor = std::sin(node.from_right);
        } else {
          factor = std::sin(roots[k] - t);
        }
        log_mag += std::log(std::abs(factor));
      }
      return std::exp(exponent * log_mag);
    };
    total = accumulate(total, tanh_sinh(integrand, lo, hi, tol));
  }
  return total;
}

QuadratureResult area_line(const BinaryForm& f, double tol) {
  const std::size_t n = f.degree();
  require_area_degree(n);
  const double exponent = -2.0 / static_cast<double>(n);
  constexpr double kHalfPi = std::numbers::pi / 2.0;

  // p(x) = f(x, 1) has degree d = n - m, m = number of leading zero
  // coefficients. With x = tan u, sec^2(u) |p(tan u)|^(-2/n) equals
  // |cos u|^(2d/n - 2) |P(sin u, cos u)|^(-2/n), P the degree-d
  // homogenization of p.
  std::size_t m = 0;
  while (f[m] == 0) {
    ++m;
  }
  const std::size_t d = n - m;
  const std::vector<double> homog(f.approx().begin() + static_cast<std::ptrdiff_t>(m),
                                  f.approx().end());
  const double jacobian_power = 2.0 * static_cast<double>(d) / static_cast<double>(n) - 2.0;

  const auto g = [&homog](double u) { return evaluate_real(homog, std::sin(u), std::cos(u)); };
  const std::vector<double> roots = scan_zeros(g, -kHalfPi, kHalfPi);

  // The factor for root u_k at (sin u, cos u) is sin(u - u_k), i.e. division
  // by (S cos u_k - C sin u_k).
  std::vector<double> rest = homog;
  for (const double r : roots) {
    rest = deflate(rest, std::cos(r), std::sin(r));
  }

  std::vector<Panel> panels;
  double lo = -kHalfPi;
  std::optional<std::size_t> lo_root;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    panels.push_back({lo, roots[k], lo_root, k});
    lo = roots[k];
    lo_root = k;
  }
  panels.push_back({lo, kHalfPi, lo_root, std::nullopt});

  QuadratureResult total{0.0, 0.0, 0, true};
  for (const Panel& panel : panels) {
    const EndpointIntegrand integrand = [&](const QuadratureNode& node) {
      double s = std::sin(node.x);
      double c = std::cos(node.x);
      if (!panel.lo_root && node.from_left <= node.from_right) {
        s = -std::cos(node.from_left);
        c = std::sin(node.from_left);
      } else if (!panel.hi_root && node.from_right < node.from_left) {
        s = std::cos(node.from_right);
        c = std::sin(node.from_right);
      }
      double log_mag = std::log(std::abs(evaluate_real(rest, s, c)));
      for (std::size_t k = 0; k < roots.size(); ++k) {
        double factor;
        if (panel.lo_root == k) {
          factor = std::sin(node.from_left);
        } else if (panel.hi_root == k) {
          factor = std::sin(node.from_right);
        } else {
          factor = std::sin(node.x - roots[k]);
        }
        log_mag += std::log(std::abs(factor));
      }
      double log_value = exponent * log_mag;
      if (jacobian_power != 0.0) {
        log_value += jacobian_power * std::log(std::abs(c));
      }
      return std::exp(log_value);
    };
    total = accumulate(total, tanh_sinh(integrand, panel.lo, panel.hi, tol));
  }
  return total;
}

double area_fstar_closed(std::uint64_t n) {
  require_area_degree(n);
  const double inv = 1.0 / static_cast<double>(n);
  return std::pow(4.0, 1.0 - inv) * beta_closed(0.5 - inv, 0.5);
}

double area_sn_closed(std::uint64_t n) {
  require_area_degree(n);
  const double inv = 1.0 / static_cast<double>(n);
  return std::pow(4.0, static_cast<double>(nu_p(2, n)) * inv) * beta_closed(0.5 - inv, 0.5);
}

double bean_invariant(const BinaryForm& f, double tol) {
  const std::size_t n = f.degree();
  require_area_degree(n);
  const mpq_class disc = discriminant(f);
  if (disc == 0) {
    throw DomainError("bean invariant requires a nonzero discriminant");
  }
  const QuadratureResult area = area_polar(f, tol);
  if (!area.converged) {
    throw ConvergenceError("area quadrature did not converge");
  }
  return discriminant_root(disc, n) * area.value;
}

}  // namespace binform
