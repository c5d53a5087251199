#include "binform/real_roots.hpp"

#include <algorithm>
#include <cmath>

namespace binform {

long double polyval(const std::vector<long double>& a, long double x) {
  long double acc = 0.0L;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

namespace {

std::vector<long double> trimmed(std::vector<long double> a) {
  while (!a.empty() && a.back() == 0.0L) {
    a.pop_back();
  }
  return a;
}

int sign_of(long double v) { return v > 0.0L ? 1 : (v < 0.0L ? -1 : 0); }

long double bisect(const std::vector<long double>& a, long double lo, long double hi) {
  const int lo_sign = sign_of(polyval(a, lo));
  for (int iter = 0; iter < 256; ++iter) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const int s = sign_of(polyval(a, mid));
    if (s == 0) {
      return mid;
    }
    (s == lo_sign ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

}  // namespace

std::vector<long double> real_roots(const std::vector<long double>& ascending) {
  const std::vector<long double> a = trimmed(ascending);
  if (a.size() <= 1) {
    return {};
  }
  const std::size_t degree = a.size() - 1;
  if (degree == 1) {
    return {-a[0] / a[1]};
  }

  long double bound = 0.0L;
  for (std::size_t i = 0; i < degree; ++i) {
    bound = std::max(bound, std::abs(a[i] / a[degree]));
  }
  bound += 1.0L;

  std::vector<long double> derivative(degree);
  for (std::size_t i = 1; i <= degree; ++i) {
    derivative[i - 1] = a[i] * static_cast<long double>(i);
  }
  std::vector<long double> breaks{-bound};
  for (const long double c : real_roots(derivative)) {
    if (c > -bound && c < bound) {
      breaks.push_back(c);
    }
  }
  breaks.push_back(bound);

  std::vector<long double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const long double lo = breaks[i];
    const long double hi = breaks[i + 1];
    const int s_lo = sign_of(polyval(a, lo));
    const int s_hi = sign_of(polyval(a, hi));
    if (s_lo == 0) {
      roots.push_back(lo);
    } else if (s_hi != 0 && s_lo != s_hi) {
      roots.push_back(bisect(a, lo, hi));
    }
  }
  if (sign_of(polyval(a, breaks.back())) == 0) {
    roots.push_back(breaks.back());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace binform
