#ifndef RDB2OWL_DIAGNOSTICS_HPP
#define RDB2OWL_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdb2owl {

enum class Severity { Error, Warning, Note };

std::string_view severity_name(Severity s);

// Closed set of diagnostic codes. Every diagnostic carries one of these;
// the CLI documents them and tests cover each.
namespace diag {
inline constexpr const char* SyntaxError = "SyntaxError";
inline constexpr const char* DuplicateTable = "DuplicateTable";
inline constexpr const char* DuplicateColumn = "DuplicateColumn";
inline constexpr const char* UnknownType = "UnknownType";
inline constexpr const char* DanglingKeyColumn = "DanglingKeyColumn";
inline constexpr const char* SkippedStatement = "SkippedStatement";
inline constexpr const char* HeaderMismatch = "HeaderMismatch";
inline constexpr const char* RowArityError = "RowArityError";
inline constexpr const char* IoError = "IoError";
inline constexpr const char* UnknownTable = "UnknownTable";
inline constexpr const char* UnknownColumn = "UnknownColumn";
inline constexpr const char* UnresolvedReference = "UnresolvedReference";
inline constexpr const char* KeyMismatch = "KeyMismatch";
inline constexpr const char* MissingPrimaryKey = "MissingPrimaryKey";
inline constexpr const char* KeylessTableFallback = "KeylessTableFallback";
inline constexpr const char* DuplicateRelation = "DuplicateRelation";
inline constexpr const char* ClassifyConflict = "ClassifyConflict";
inline constexpr const char* IriCollision = "IriCollision";
inline constexpr const char* InvalidNCName = "InvalidNCName";
inline constexpr const char* NullKeyCell = "NullKeyCell";
inline constexpr const char* LiteralCoercionError = "LiteralCoercionError";
inline constexpr const char* ReferentialIntegrityWarning = "ReferentialIntegrityWarning";
inline constexpr const char* UnknownRelation = "UnknownRelation";
inline constexpr const char* NoKeyAxioms = "NoKeyAxioms";
inline constexpr const char* InternalError = "InternalError";
}  // namespace diag

// Where a diagnostic points. Either a file position (parsers) or a
// relation/row coordinate (data conversion), or both absent.
struct Location {
  std::string file;
  std::optional<int> line;
  std::optional<int> column;
  std::string relation;
  std::optional<long> row;
  std::string column_name;

  static Location at(std::string file, int line, int column) {
    Location l;
    l.file = std::move(file);
    l.line = line;
    l.column = column;
    return l;
  }
  static Location in_relation(std::string relation, std::optional<long> row = {},
                              std::string column_name = {}) {
    Location l;
    l.relation = std::move(relation);
    l.row = row;
    l.column_name = std::move(column_name);
    return l;
  }
};

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  Location location;
  std::string message;

  std::string to_text() const;
  std::string to_json_line() const;
};

class Diagnostics {
 public:
  void add(Diagnostic d) { items_.push_back(std::move(d)); }
  void error(std::string code, Location loc, std::string message) {
    add({Severity::Error, std::move(code), std::move(loc), std::move(message)});
  }
  void warning(std::string code, Location loc, std::string message) {
    add({Severity::Warning, std::move(code), std::move(loc), std::move(message)});
  }
  void note(std::string code, Location loc, std::string message) {
    add({Severity::Note, std::move(code), std::move(loc), std::move(message)});
  }

  bool has_errors() const;
  std::size_t error_count() const;
  bool has_code(std::string_view code) const;

  const std::vector<Diagnostic>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<Diagnostic> items_;
};

}  // namespace rdb2owl

#endif
