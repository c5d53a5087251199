#include "binform/resultant.hpp"

#include <utility>

#include "binform/errors.hpp"

namespace binform {

Polynomial::Polynomial(std::vector<mpq_class> ascending) : coefficients_(std::move(ascending)) {
  for (auto& c : coefficients_) {
    c.canonicalize();
  }
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

std::size_t Polynomial::degree() const {
  if (is_zero()) {
    throw DomainError("the zero polynomial has no degree");
  }
  return coefficients_.size() - 1;
}

const mpq_class& Polynomial::leading() const { return coefficients_.at(degree()); }

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) {
    return {};
  }
  std::vector<mpq_class> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
  }
  return Polynomial(std::move(d));
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t size = m.size();
  if (size == 0) {
    return 1;
  }
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k] == 0) {
        ++swap_row;
      }
      if (swap_row == size) {
        return 0;
      }
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  mpz_class det = m[size - 1][size - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

namespace {

// Multiplies p by the lcm of its denominators; returns the integer
// coefficients (descending degree) and the multiplier.
std::pair<std::vector<mpz_class>, mpz_class> integer_descending(const Polynomial& p) {
  mpz_class scale = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(p.coefficients().size());
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    mpq_class v = *it * scale;
    out.push_back(v.get_num());
  }
  return {std::move(out), scale};
}

}  // namespace

mpq_class sylvester_resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) {
    throw DomainError("resultant of a zero polynomial is undefined");
  }
  const std::size_t m = p.degree();
  const std::size_t k = q.degree();
  auto [pc, p_scale] = integer_descending(p);
  auto [qc, q_scale] = integer_descending(q);

  const std::size_t size = m + k;
  std::vector<std::vector<mpz_class>> sylvester(size, std::vector<mpz_class>(size, 0));
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t i = 0; i <= m; ++i) {
      sylvester[row][row + i] = pc[i];
    }
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= k; ++i) {
      sylvester[k + row][row + i] = qc[i];
    }
  }
  const mpz_class det = bareiss_determinant(std::move(sylvester));

  // Res(sp, tq) = s^deg(q) t^deg(p) Res(p, q).
  mpz_class divisor;
  mpz_class t;
  mpz_pow_ui(divisor.get_mpz_t(), p_scale.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(t.get_mpz_t(), q_scale.get_mpz_t(), static_cast<unsigned long>(m));
  divisor *= t;
  mpq_class result(det, divisor);
  result.canonicalize();
  return result;
}

}  // namespace binform
