#ifndef RDB2OWL_SCHEMA_HPP
#define RDB2OWL_SCHEMA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdb2owl {

// Supported SQL column types, normalized (INTEGER == INT, NUMERIC == DECIMAL,
// DATETIME == TIMESTAMP, REAL/DOUBLE == FLOAT).
enum class SqlType {
  Int,
  BigInt,
  SmallInt,
  Decimal,
  Float,
  Char,
  Varchar,
  Text,
  Date,
  Time,
  Timestamp,
  Boolean,
};

// Maps a type keyword to its normalized type; nullopt for anything outside
// the supported set.
std::optional<SqlType> parse_type_keyword(std::string_view keyword);
std::string_view type_keyword(SqlType t);
bool type_admits_length(SqlType t);  // CHAR, VARCHAR, DECIMAL

bool iequals(std::string_view a, std::string_view b);
std::string to_lower(std::string_view s);

struct ColumnDef {
  std::string name;
  SqlType type = SqlType::Int;
  std::optional<int> length;
  std::optional<int> scale;  // DECIMAL only
  bool nullable = true;
  std::optional<std::string> default_value;

  friend bool operator==(const ColumnDef&, const ColumnDef&) = default;
};

struct ForeignKeyClause {
  std::vector<std::string> columns;
  std::string referenced_table;
  // Empty means "the referenced table's primary key"; resolved in extract_mtrdb.
  std::vector<std::string> referenced_columns;
  int line = 0;
  int column = 0;

  friend bool operator==(const ForeignKeyClause& a, const ForeignKeyClause& b) {
    return a.columns == b.columns && iequals(a.referenced_table, b.referenced_table) &&
           a.referenced_columns == b.referenced_columns;
  }
};

struct TableDef {
  std::string name;
  std::vector<ColumnDef> columns;
  std::vector<std::string> primary_key;
  std::vector<ForeignKeyClause> foreign_keys;
  std::vector<std::vector<std::string>> uniques;
  int line = 0;
  int column = 0;

  const ColumnDef* find_column(std::string_view name) const;

  friend bool operator==(const TableDef& a, const TableDef& b) {
    return a.name == b.name && a.columns == b.columns && a.primary_key == b.primary_key &&
           a.foreign_keys == b.foreign_keys && a.uniques == b.uniques;
  }
};

struct SchemaAst {
  std::vector<TableDef> tables;

  const TableDef* find_table(std::string_view name) const;

  friend bool operator==(const SchemaAst& a, const SchemaAst& b) { return a.tables == b.tables; }
};

// One data row; absent cell = SQL NULL. `line` is the source line for
// error reporting (0 when synthesized).
struct Row {
  std::vector<std::optional<std::string>> cells;
  long line = 0;
};

struct Recordset {
  std::string relation_name;
  std::vector<std::string> header;
  std::vector<Row> rows;
};

// Canonical DDL output; parse_ddl(canonical_ddl(ast)) == ast.
std::string canonical_ddl(const TableDef& table);
std::string canonical_ddl(const SchemaAst& schema);

}  // namespace rdb2owl

#endif
