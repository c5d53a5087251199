#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "binform/binary_form.hpp"
#include "binform/dyadic.hpp"
#include "binform/resultant.hpp"

namespace binform {

/// Coefficients of F_n^*, entry k being 2^(1-n) (-1)^((k-1)/2) C(n, k) for odd
/// k and zero for even k. Throws DomainError for n == 0.
std::vector<DyadicRational> fstar_dyadic_coefficients(std::uint64_t n);

/// F_n^* as a BinaryForm.
BinaryForm fstar_coefficients(std::uint64_t n);

/// S_n = ell(n) F_n^*, built directly as 2^(-nu_2(n)) (-1)^((k-1)/2) C(n, k).
BinaryForm sn_coefficients(std::uint64_t n);

/// gcd of the coefficient magnitudes. Throws DomainError for a non-integral
/// form.
mpz_class content(const BinaryForm& f);

mpq_class evaluate(const BinaryForm& f, const mpq_class& x, const mpq_class& y);
/// Horner evaluation accumulated in extended precision, rounded to double.
double evaluate(const BinaryForm& f, double x, double y);

/// The defining product prod_{k=1..n} (x sin(k pi/n) - y cos(k pi/n)).
/// Accumulated in long double, rounded to double.
double eval_fstar_product(std::uint64_t n, double x, double y);

/// c * f. Throws DomainError when c == 0.
BinaryForm scale(const BinaryForm& f, const mpq_class& c);

/// Integer matrix acting on row vectors: (X, Y) -> (a X + c Y, b X + d Y).
struct UnimodularMatrix {
  mpz_class a = 1;
  mpz_class b = 0;
  mpz_class c = 0;
  mpz_class d = 1;

  mpz_class determinant() const { return a * d - b * c; }
  /// Inverse of a matrix with determinant +-1.
  UnimodularMatrix inverse() const;
  static UnimodularMatrix shear(const mpz_class& t) { return {1, t, 0, 1}; }
};

/// f((X, Y) M), expanded exactly. Throws DomainError unless det M = +-1.
BinaryForm substitute_unimodular(const BinaryForm& f, const UnimodularMatrix& m);

/// f(x, 1) as a univariate polynomial.
Polynomial dehomogenize(const BinaryForm& f);

/// Discriminant (-1)^(n(n-1)/2) Res(p, p') / a_0 with p = f(x, 1). Forms with
/// a_0 == 0 are first sheared by (X, Y) -> (X, t X + Y) with the least t >= 1
/// for which f(1, t) != 0. Throws DomainError for degree < 2.
mpq_class discriminant(const BinaryForm& f);

/// n^n / 2^(n(n-1)), the magnitude of the discriminant of F_n^*.
mpq_class fstar_disc_closed(std::uint64_t n);

/// |D|^(1/(n(n-1))) in double precision without overflowing on huge |D|.
double discriminant_root(const mpq_class& disc, std::uint64_t n);

}  // namespace binform
