#include "binform/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "binform/errors.hpp"

namespace binform {

namespace {

// Lanczos coefficients for g = 607/128 and 14 terms, from Numerical Recipes,
// 3rd ed., section 6.1 (routine gammln); attributed there to P. Godfrey.
constexpr double kLanczosG = 5.24218750000000000;  // 671/128 = g + 1/2
constexpr double kLanczosBase = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoefficients{
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

double lanczos_log_gamma(double x) {
  double tmp = x + kLanczosG;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double series = kLanczosBase;
  double denom = x;
  for (const double c : kLanczosCoefficients) {
    denom += 1.0;
    series += c / denom;
  }
  return tmp + std::log(kSqrtTwoPi * series / x);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma requires x > 0");
  }
  if (x < 0.5) {
    // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

double beta_closed(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("beta requires positive arguments");
  }
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

}  // namespace binform
