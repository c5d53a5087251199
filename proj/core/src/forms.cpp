#include "binform/forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "binform/arith.hpp"
#include "binform/errors.hpp"

namespace binform {

namespace {

void require_positive_degree(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("degree must be positive");
  }
}

// Sign (-1)^((k-1)/2) for odd k.
int odd_index_sign(std::uint64_t k) { return ((k - 1) / 2) % 2 == 0 ? 1 : -1; }

using Coeffs = std::vector<mpq_class>;

Coeffs multiply(const Coeffs& p, const Coeffs& q) {
  Coeffs out(p.size() + q.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

}  // namespace

std::vector<DyadicRational> fstar_dyadic_coefficients(std::uint64_t n) {
  require_positive_degree(n);
  std::vector<DyadicRational> coeffs(n + 1);
  for (std::uint64_t k = 1; k <= n; k += 2) {
    mpz_class c = binomial(n, k);
    if (odd_index_sign(k) < 0) {
      c = -c;
    }
    coeffs[k] = DyadicRational(std::move(c), n - 1);
  }
  return coeffs;
}

BinaryForm fstar_coefficients(std::uint64_t n) {
  const auto dyadic = fstar_dyadic_coefficients(n);
  std::vector<mpq_class> coeffs;
  coeffs.reserve(dyadic.size());
  for (const auto& d : dyadic) {
    coeffs.push_back(d.to_rational());
  }
  return BinaryForm(std::move(coeffs));
}

BinaryForm sn_coefficients(std::uint64_t n) {
  require_positive_degree(n);
  const mpz_class divisor = pow2(nu_p(2, n));
  std::vector<mpq_class> coeffs(n + 1, mpq_class(0));
  for (std::uint64_t k = 1; k <= n; k += 2) {
    mpz_class c = binomial(n, k);
    if (mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()) == 0) {
      throw std::logic_error("C(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") is not divisible by 2^nu_2(n)");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    coeffs[k] = odd_index_sign(k) < 0 ? mpq_class(-c) : mpq_class(c);
  }
  return BinaryForm(std::move(coeffs));
}

mpz_class content(const BinaryForm& f) {
  if (!f.is_integral()) {
    throw DomainError("content is defined for integer forms only");
  }
  mpz_class g = 0;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  return g;
}

mpq_class evaluate(const BinaryForm& f, const mpq_class& x, const mpq_class& y) {
  // Homogeneous Horner: after step j the accumulator is sum_{i<=j} a_i x^(j-i) y^i.
  const auto& a = f.coefficients();
  mpq_class acc = a[0];
  mpq_class ypow = 1;
  for (std::size_t j = 1; j < a.size(); ++j) {
    ypow *= y;
    acc = acc * x + a[j] * ypow;
  }
  return acc;
}

double evaluate(const BinaryForm& f, double x, double y) {
  // Accumulated in long double: near a real root line the expanded sum
  // cancels by up to (|x| + |y|)^n / |f(x, y)|.
  const auto a = f.approx();
  long double acc = a[0];
  long double ypow = 1.0L;
  for (std::size_t j = 1; j < a.size(); ++j) {
    ypow *= y;
    acc = acc * x + static_cast<long double>(a[j]) * ypow;
  }
  return static_cast<double>(acc);
}

double eval_fstar_product(std::uint64_t n, double x, double y) {
  require_positive_degree(n);
  // Long double for the same reason as the Horner evaluation: each linear
  // factor cancels near its root line.
  long double product = 1.0L;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const long double angle =
        static_cast<long double>(k) * std::numbers::pi_v<long double> / static_cast<long double>(n);
    product *= x * std::sin(angle) - y * std::cos(angle);
  }
  return static_cast<double>(product);
}

BinaryForm scale(const BinaryForm& f, const mpq_class& c) {
  if (c == 0) {
    throw DomainError("scaling a form by zero");
  }
  std::vector<mpq_class> coeffs = f.coefficients();
  for (auto& a : coeffs) {
    a *= c;
  }
  return BinaryForm(std::move(coeffs));
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  const mpz_class det = determinant();
  if (det != 1 && det != -1) {
    throw DomainError("matrix is not unimodular");
  }
  // For det = +-1 the inverse is det * adjugate.
  return {det * d, -det * b, -det * c, det * a};
}

BinaryForm substitute_unimodular(const BinaryForm& f, const UnimodularMatrix& m) {
  const mpz_class det = m.determinant();
  if (det != 1 && det != -1) {
    throw DomainError("substitution matrix must have determinant +-1, got " + det.get_str());
  }
  const std::size_t n = f.degree();
  // New X-argument a X + c Y and Y-argument b X + d Y as degree-1 forms.
  const Coeffs x_arg{mpq_class(m.a), mpq_class(m.c)};
  const Coeffs y_arg{mpq_class(m.b), mpq_class(m.d)};

  std::vector<Coeffs> x_pow{Coeffs{1}};
  std::vector<Coeffs> y_pow{Coeffs{1}};
  for (std::size_t i = 1; i <= n; ++i) {
    x_pow.push_back(multiply(x_pow.back(), x_arg));
    y_pow.push_back(multiply(y_pow.back(), y_arg));
  }
  Coeffs out(n + 1, mpq_class(0));
  for (std::size_t j = 0; j <= n; ++j) {
    if (f[j] == 0) {
      continue;
    }
    const Coeffs term = multiply(x_pow[n - j], y_pow[j]);
    for (std::size_t i = 0; i <= n; ++i) {
      out[i] += f[j] * term[i];
    }
  }
  return BinaryForm(std::move(out));
}

Polynomial dehomogenize(const BinaryForm& f) {
  const auto& a = f.coefficients();
  return Polynomial(std::vector<mpq_class>(a.rbegin(), a.rend()));
}

mpq_class discriminant(const BinaryForm& f) {
  const std::size_t n = f.degree();
  if (n < 2) {
    throw DomainError("discriminant requires degree >= 2");
  }
  BinaryForm g = f;
  if (g[0] == 0) {
    // f(1, t) is a nonzero polynomial in t of degree <= n, so some t in 1..n+1 works.
    mpz_class t = 1;
    while (evaluate(f, mpq_class(1), mpq_class(t)) == 0) {
      ++t;
    }
    g = substitute_unimodular(f, UnimodularMatrix::shear(t));
  }
  const Polynomial p = dehomogenize(g);
  mpq_class disc = sylvester_resultant(p, p.derivative()) / g[0];
  if ((n * (n - 1) / 2) % 2 == 1) {
    disc = -disc;
  }
  return disc;
}

mpq_class fstar_disc_closed(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("fstar_disc_closed requires n >= 2");
  }
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpq_class q(num, pow2(n * (n - 1)));
  q.canonicalize();
  return q;
}

double discriminant_root(const mpq_class& disc, std::uint64_t n) {
  if (n < 2) {
    throw DomainError("discriminant_root requires n >= 2");
  }
  if (disc == 0) {
    return 0.0;
  }
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, disc.get_num().get_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, disc.get_den().get_mpz_t());
  const double log_abs = std::log(std::abs(num_mant)) - std::log(den_mant) +
                         static_cast<double>(num_exp - den_exp) * std::numbers::ln2;
  return std::exp(log_abs / static_cast<double>(n * (n - 1)));
}

}  // namespace binform
