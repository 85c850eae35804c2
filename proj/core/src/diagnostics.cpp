#include "rdb2owl/diagnostics.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rdb2owl {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "error";
}

std::string Diagnostic::to_text() const {
  std::ostringstream out;
  out << severity_name(severity) << "[" << code << "]";
  if (!location.file.empty()) {
    out << " " << location.file;
    if (location.line) {
      out << ":" << *location.line;
      if (location.column) out << ":" << *location.column;
    }
  }
  if (!location.relation.empty()) {
    out << " " << location.relation;
    if (location.row) out << " row " << *location.row;
    if (!location.column_name.empty()) out << " column " << location.column_name;
  }
  out << ": " << message;
  return out.str();
}

std::string Diagnostic::to_json_line() const {
  nlohmann::json j;
  j["severity"] = std::string(severity_name(severity));
  j["code"] = code;
  j["message"] = message;
  nlohmann::json loc = nlohmann::json::object();
  if (!location.file.empty()) loc["file"] = location.file;
  if (location.line) loc["line"] = *location.line;
  if (location.column) loc["column"] = *location.column;
  if (!location.relation.empty()) loc["relation"] = location.relation;
  if (location.row) loc["row"] = *location.row;
  if (!location.column_name.empty()) loc["columnName"] = location.column_name;
  j["location"] = loc;
  return j.dump();
}

bool Diagnostics::has_errors() const {
  return std::any_of(items_.begin(), items_.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::size_t Diagnostics::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(),
                    [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

bool Diagnostics::has_code(std::string_view code) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace rdb2owl
