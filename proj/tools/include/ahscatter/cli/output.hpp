#pragma once

// Result documents: {"inputs", "outputs", "provenance", "warnings"} rendered
// as JSON or as RFC-4180 CSV (one row per flattened leaf).

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace ahscatter::cli {

using json = nlohmann::ordered_json;

enum class Format { json, csv };

struct Document {
  json inputs = json::object();
  json outputs = json::object();
  std::string provenance;
  std::vector<std::string> warnings;
};

/// Plain number when the imaginary part is exactly zero, else {"re", "im"}.
json to_json(std::complex<double> z);
json to_json(const std::vector<std::complex<double>>& v);

void emit(const Document& doc, Format fmt, std::ostream& out);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

}  // namespace ahscatter::cli
