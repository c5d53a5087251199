#pragma once

#include <vector>

namespace binform {

/// Real roots of a polynomial with coefficients given lowest degree first.
/// Roots of the derivative split the line into monotone pieces, each of which
/// is bisected when it brackets a sign change; everything lies within the
/// Cauchy bound. Returned sorted; multiple roots may be reported once or not
/// at all, so callers needing exactness must verify neighbourhoods themselves.
std::vector<long double> real_roots(const std::vector<long double>& ascending);

/// Horner evaluation of the same representation.
long double polyval(const std::vector<long double>& ascending, long double x);

}  // namespace binform
