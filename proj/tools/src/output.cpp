#include "ahscatter/cli/output.hpp"

#include <ostream>

namespace ahscatter::cli {

json to_json(std::complex<double> z) {
  if (z.imag() == 0.0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json to_json(const std::vector<std::complex<double>>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

namespace {

std::string leaf(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const std::string& section, const std::string& prefix, const json& v, std::ostream& out) {
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(section, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), out);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      flatten(section, prefix.empty() ? std::to_string(i) : prefix + "." + std::to_string(i), v[i], out);
  } else {
    out << csv_field(section) << ',' << csv_field(prefix) << ',' << csv_field(leaf(v)) << "\r\n";
  }
}

}  // namespace

void emit(const Document& doc, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    json j = json::object();
    j["inputs"] = doc.inputs;
    j["outputs"] = doc.outputs;
    j["provenance"] = doc.provenance;
    j["warnings"] = doc.warnings;
    out << j.dump(2) << '\n';
    return;
  }
  out << "section,key,value\r\n";
  flatten("inputs", "", doc.inputs, out);
  flatten("outputs", "", doc.outputs, out);
  out << "provenance,," << csv_field(doc.provenance) << "\r\n";
  for (std::size_t i = 0; i < doc.warnings.size(); ++i)
    out << "warnings," << i << ',' << csv_field(doc.warnings[i]) << "\r\n";
}

}  // namespace ahscatter::cli
