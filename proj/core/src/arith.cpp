#include "binform/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "binform/errors.hpp"

namespace binform {

bool is_prime(std::uint64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw DomainError("valuation base " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                      "): k exceeds n");
  }
  k = std::min(k, n - k);
  mpz_class result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

std::uint64_t nu_p(std::uint64_t p, const mpz_class& m) {
  require_prime(p);
  if (m == 0) {
    throw DomainError("valuation of zero is infinite");
  }
  mpz_class rest = abs(m);
  std::uint64_t order = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    ++order;
  }
  return order;
}

std::uint64_t nu_p(std::uint64_t p, std::uint64_t m) {
  return nu_p(p, mpz_class(static_cast<unsigned long>(m)));
}

Valuation valuation(std::uint64_t p, const mpz_class& m) { return {p, nu_p(p, m)}; }

std::uint64_t legendre_factorial_valuation(std::uint64_t p, std::uint64_t m) {
  require_prime(p);
  std::uint64_t total = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) {
    total += q;
  }
  return total;
}

mpz_class odd_binomial_gcd(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("odd_binomial_gcd requires n >= 1");
  }
  mpz_class entry = 1;  // C(n, 0)
  mpz_class g = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    entry *= static_cast<unsigned long>(n - k + 1);
    mpz_divexact_ui(entry.get_mpz_t(), entry.get_mpz_t(), static_cast<unsigned long>(k));
    if (k % 2 == 1) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.get_mpz_t());
    }
  }
  return g;
}

mpz_class pow2(std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

mpz_class ell(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("ell requires n >= 1");
  }
  return pow2(n - 1 - nu_p(2, n));
}

bool hermite_divisibility_holds(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k > n) {
    throw DomainError("hermite_divisibility_holds requires 1 <= k <= n");
  }
  const std::uint64_t quotient = n / std::gcd(n, k);
  return mpz_divisible_ui_p(binomial(n, k).get_mpz_t(), static_cast<unsigned long>(quotient)) != 0;
}

}  // namespace binform
