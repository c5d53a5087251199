#include "binform/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "binform/errors.hpp"

namespace binform {

BinaryForm::BinaryForm(std::vector<mpq_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() < 2) {
    throw DomainError("a binary form needs degree >= 1 (at least two coefficients)");
  }
  for (auto& c : coefficients_) {
    c.canonicalize();
  }
  if (std::all_of(coefficients_.begin(), coefficients_.end(),
                  [](const mpq_class& c) { return c == 0; })) {
    throw DomainError("a binary form needs at least one nonzero coefficient");
  }
  approx_.reserve(coefficients_.size());
  for (const auto& c : coefficients_) {
    approx_.push_back(c.get_d());
  }
}

bool BinaryForm::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

namespace {

void append_power(std::ostringstream& out, const char* var, std::size_t power) {
  if (power == 0) {
    return;
  }
  out << var;
  if (power > 1) {
    out << '^' << power;
  }
}

}  // namespace

std::string BinaryForm::to_string() const {
  std::ostringstream out;
  const std::size_t n = degree();
  bool first = true;
  for (std::size_t k = 0; k <= n; ++k) {
    const mpq_class& c = coefficients_[k];
    if (c == 0) {
      continue;
    }
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) {
        out << '-';
      }
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool monomial = n - k > 0 || k > 0;
    if (magnitude != 1 || !monomial) {
      out << magnitude.get_str();
      if (monomial) {
        out << '*';
      }
    }
    append_power(out, "X", n - k);
    if (n - k > 0 && k > 0) {
      out << '*';
    }
    append_power(out, "Y", k);
  }
  return out.str();
}

}  // namespace binform
