#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace binform {

/// Exact value mantissa / 2^exponent, kept canonical: the mantissa is odd, or
/// the value is zero with exponent 0.
class DyadicRational {
public:
  DyadicRational() = default;
  DyadicRational(mpz_class mantissa, std::uint64_t exponent);

  /// Returns nullopt when the denominator is not a power of two.
  static std::optional<DyadicRational> from_rational(const mpq_class& value);

  const mpz_class& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == 0; }

  mpq_class to_rational() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }

private:
  mpz_class mantissa_ = 0;
  std::uint64_t exponent_ = 0;
};

}  // namespace binform
