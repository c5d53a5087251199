#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace binform::cli {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

/// Every command's output: the command name, its parameters, the results and
/// a provenance entry naming the route behind each numeric result.
struct OutputEnvelope {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

/// Floats in CSV and text output use 17 significant digits.
std::string format_double(double value);

void write_json(std::ostream& out, const OutputEnvelope& envelope);

/// key: value lines; nested objects are flattened with dotted keys.
void write_text(std::ostream& out, const OutputEnvelope& envelope);

/// Writes a header line and one line per row; values are emitted verbatim.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace binform::cli
