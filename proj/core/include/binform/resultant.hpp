#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace binform {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// The declared degree is the index of the last nonzero coefficient.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> ascending);

  bool is_zero() const { return coefficients_.empty(); }
  /// Throws DomainError for the zero polynomial.
  std::size_t degree() const;
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  const mpq_class& leading() const;

  Polynomial derivative() const;
  mpq_class operator()(const mpq_class& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<mpq_class> coefficients_;  // trailing zeros stripped
};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// The matrix is row-major and square.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> matrix);

/// Resultant of p and q as the determinant of their Sylvester matrix. Rational
/// inputs are scaled to integer polynomials first and the scale divided back
/// out, so elimination stays fraction-free. Throws DomainError when either
/// polynomial is zero.
mpq_class sylvester_resultant(const Polynomial& p, const Polynomial& q);

}  // namespace binform
