#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace binform {

/// Homogeneous form a_0 X^n + a_1 X^(n-1) Y + ... + a_n Y^n with exact
/// rational coefficients, indexed by the power of Y. Immutable once built.
class BinaryForm {
public:
  /// Throws DomainError unless there are at least two coefficients and one of
  /// them is nonzero.
  explicit BinaryForm(std::vector<mpq_class> coefficients);

  std::size_t degree() const { return coefficients_.size() - 1; }
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  const mpq_class& operator[](std::size_t k) const { return coefficients_[k]; }

  /// Coefficients rounded to double, cached at construction.
  std::span<const double> approx() const { return approx_; }

  bool is_integral() const;

  /// Human-readable expansion, e.g. "3*X^2*Y - Y^3".
  std::string to_string() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.coefficients_ == b.coefficients_;
  }

private:
  std::vector<mpq_class> coefficients_;
  std::vector<double> approx_;
};

}  // namespace binform
