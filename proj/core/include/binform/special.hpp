#pragma once

namespace binform {

/// ln Gamma(x) for x > 0 from a 14-term Lanczos series (g = 607/128), with
/// the reflection formula below x = 1/2. Throws DomainError for x <= 0.
double log_gamma(double x);

/// B(x, y) = exp(ln Gamma(x) + ln Gamma(y) - ln Gamma(x + y)). Throws
/// DomainError unless x, y > 0.
double beta_closed(double x, double y);

}  // namespace binform
