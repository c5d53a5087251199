#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "binform/binary_form.hpp"

namespace binform {

/// Parses "p/q" or "p" into a canonical rational. Throws DomainError on
/// malformed text or a zero denominator.
mpq_class parse_rational(std::string_view text);

/// Form documents are JSON objects
///   {"degree": n, "coefficients": ["a_0", ..., "a_n"]}
/// with each coefficient an exact rational string. Parsing validates that the
/// array has n + 1 entries and throws DomainError otherwise.
BinaryForm parse_form_document(std::string_view json_text);
std::string form_document(const BinaryForm& f);

BinaryForm read_form_file(const std::filesystem::path& path);
void write_form_file(const std::filesystem::path& path, const BinaryForm& f);

}  // namespace binform
