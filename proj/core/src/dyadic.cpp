#include "binform/dyadic.hpp"

#include "binform/arith.hpp"

namespace binform {

DyadicRational::DyadicRational(mpz_class mantissa, std::uint64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto twos = static_cast<std::uint64_t>(mpz_scan1(mantissa_.get_mpz_t(), 0));
  const std::uint64_t shift = std::min(twos, exponent_);
  mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  exponent_ -= shift;
}

std::optional<DyadicRational> DyadicRational::from_rational(const mpq_class& value) {
  const mpz_class& den = value.get_den();
  const auto twos = static_cast<std::uint64_t>(mpz_scan1(den.get_mpz_t(), 0));
  if (den != pow2(twos)) {
    return std::nullopt;
  }
  return DyadicRational(value.get_num(), twos);
}

mpq_class DyadicRational::to_rational() const {
  mpq_class q(mantissa_, pow2(exponent_));
  q.canonicalize();
  return q;
}

double DyadicRational::to_double() const { return to_rational().get_d(); }

std::string DyadicRational::to_string() const { return to_rational().get_str(); }

}  // namespace binform
