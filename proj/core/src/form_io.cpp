#include "binform/form_io.hpp"

#include <fstream>
#include <sstream>

#include "binform/errors.hpp"
#include "json.hpp"

namespace binform {

using nlohmann::json;

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  const std::string num_text = s.substr(0, slash);
  const std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid_integer = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) {
      i = 1;
    }
    if (i == t.size()) {
      return false;
    }
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') {
        return false;
      }
    }
    return true;
  };
  if (!valid_integer(num_text, true) || !valid_integer(den_text, false)) {
    throw DomainError("malformed rational '" + s + "'");
  }
  mpz_class num(num_text[0] == '+' ? num_text.substr(1) : num_text, 10);
  mpz_class den(den_text, 10);
  if (den == 0) {
    throw DomainError("zero denominator in '" + s + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

BinaryForm parse_form_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("form document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("coefficients")) {
    throw DomainError("form document needs 'degree' and 'coefficients' fields");
  }
  if (!doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 1) {
    throw DomainError("'degree' must be a positive integer");
  }
  const auto degree = doc["degree"].get<std::size_t>();
  const auto& coeffs = doc["coefficients"];
  if (!coeffs.is_array() || coeffs.size() != degree + 1) {
    throw DomainError("'coefficients' must be an array of degree + 1 entries");
  }
  std::vector<mpq_class> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.is_string()) {
      throw DomainError("coefficients must be strings holding exact rationals");
    }
    values.push_back(parse_rational(c.get<std::string>()));
  }
  return BinaryForm(std::move(values));
}

std::string form_document(const BinaryForm& f) {
  json doc;
  doc["degree"] = f.degree();
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) {
    coeffs.push_back(c.get_str());
  }
  doc["coefficients"] = std::move(coeffs);
  return doc.dump(2);
}

BinaryForm read_form_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open form file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_form_document(buffer.str());
}

void write_form_file(const std::filesystem::path& path, const BinaryForm& f) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write form file " + path.string());
  }
  out << form_document(f) << '\n';
}

}  // namespace binform
