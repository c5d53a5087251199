#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace binform {

/// p-adic order of a positive integer: p^order divides it, p^(order+1) does not.
struct Valuation {
  std::uint64_t prime = 2;
  std::uint64_t order = 0;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Trial-division primality test used to validate the prime argument of the
/// valuation functions.
bool is_prime(std::uint64_t p);

/// Exact C(n, k) by the running product C(n, i) = C(n, i-1) (n-i+1) / i.
/// Throws DomainError when k > n.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

/// Largest r with p^r | m. Throws DomainError if p is not prime or m == 0.
std::uint64_t nu_p(std::uint64_t p, const mpz_class& m);
std::uint64_t nu_p(std::uint64_t p, std::uint64_t m);

Valuation valuation(std::uint64_t p, const mpz_class& m);

/// Legendre's formula: sum over j >= 1 of floor(m / p^j), i.e. nu_p(m!).
std::uint64_t legendre_factorial_valuation(std::uint64_t p, std::uint64_t m);

/// gcd of C(n, k) over odd k in [1, n]. The full set is folded; the result is
/// never short-circuited at 2^nu_2(n), since that is the value under test.
mpz_class odd_binomial_gcd(std::uint64_t n);

/// The minimal scale 2^(n - 1 - nu_2(n)) making ell(n) * F_n^* integral.
mpz_class ell(std::uint64_t n);

/// Hermite's divisibility n / gcd(n, k) | C(n, k), evaluated directly.
bool hermite_divisibility_holds(std::uint64_t n, std::uint64_t k);

/// 2^e as an arbitrary-precision integer.
mpz_class pow2(std::uint64_t e);

}  // namespace binform
