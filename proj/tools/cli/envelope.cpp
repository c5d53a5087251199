#include "cli/envelope.hpp"

#include <cstdio>
#include <stdexcept>

namespace binform::cli {

Format parse_format(const std::string& name) {
  if (name == "json") {
    return Format::Json;
  }
  if (name == "csv") {
    return Format::Csv;
  }
  if (name == "text") {
    return Format::Text;
  }
  throw std::invalid_argument("unknown format " + name);
}

nlohmann::ordered_json OutputEnvelope::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["results"] = results;
  doc["provenance"] = provenance;
  if (!notes.empty()) {
    doc["notes"] = notes;
  }
  return doc;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_json(std::ostream& out, const OutputEnvelope& envelope) {
  out << envelope.to_json().dump(2) << '\n';
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_number_float()) {
    return format_double(v.get<double>());
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

void flatten(std::ostream& out, const std::string& prefix, const nlohmann::ordered_json& v) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      flatten(out, prefix.empty() ? key : prefix + "." + key, child);
    }
    return;
  }
  out << prefix << ": " << scalar_text(v) << '\n';
}

}  // namespace

void write_text(std::ostream& out, const OutputEnvelope& envelope) {
  out << "command: " << envelope.command << '\n';
  flatten(out, "", envelope.results);
  for (const auto& note : envelope.notes) {
    out << "note: " << note << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) {
    line(row);
  }
}

}  // namespace binform::cli
