#include "rdb2owl/schema.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rdb2owl {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<SqlType> parse_type_keyword(std::string_view keyword) {
  std::string k = to_lower(keyword);
  if (k == "int" || k == "integer") return SqlType::Int;
  if (k == "bigint") return SqlType::BigInt;
  if (k == "smallint") return SqlType::SmallInt;
  if (k == "decimal" || k == "numeric") return SqlType::Decimal;
  if (k == "float" || k == "real" || k == "double" || k == "double precision")
    return SqlType::Float;
  if (k == "char") return SqlType::Char;
  if (k == "varchar") return SqlType::Varchar;
  if (k == "text") return SqlType::Text;
  if (k == "date") return SqlType::Date;
  if (k == "time") return SqlType::Time;
  if (k == "timestamp" || k == "datetime") return SqlType::Timestamp;
  if (k == "boolean") return SqlType::Boolean;
  return std::nullopt;
}

std::string_view type_keyword(SqlType t) {
  switch (t) {
    case SqlType::Int: return "INT";
    case SqlType::BigInt: return "BIGINT";
    case SqlType::SmallInt: return "SMALLINT";
    case SqlType::Decimal: return "DECIMAL";
    case SqlType::Float: return "FLOAT";
    case SqlType::Char: return "CHAR";
    case SqlType::Varchar: return "VARCHAR";
    case SqlType::Text: return "TEXT";
    case SqlType::Date: return "DATE";
    case SqlType::Time: return "TIME";
    case SqlType::Timestamp: return "TIMESTAMP";
    case SqlType::Boolean: return "BOOLEAN";
  }
  return "INT";
}

bool type_admits_length(SqlType t) {
  return t == SqlType::Char || t == SqlType::Varchar || t == SqlType::Decimal;
}

const ColumnDef* TableDef::find_column(std::string_view name) const {
  for (const auto& c : columns)
    if (iequals(c.name, name)) return &c;
  return nullptr;
}

const TableDef* SchemaAst::find_table(std::string_view name) const {
  for (const auto& t : tables)
    if (iequals(t.name, name)) return &t;
  return nullptr;
}

namespace {

bool needs_quoting(std::string_view ident) {
  if (ident.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(ident[0])) && ident[0] != '_') return true;
  return std::any_of(ident.begin(), ident.end(), [](unsigned char c) {
    return !std::isalnum(c) && c != '_' && c != '$';
  });
}

void write_ident(std::ostream& out, std::string_view ident) {
  if (!needs_quoting(ident)) {
    out << ident;
    return;
  }
  out << '"';
  for (char c : ident) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_ident_list(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ", ";
    write_ident(out, names[i]);
  }
}

}  // namespace

std::string canonical_ddl(const TableDef& table) {
  std::ostringstream out;
  out << "CREATE TABLE ";
  write_ident(out, table.name);
  out << " (\n";
  bool first = true;
  for (const auto& c : table.columns) {
    if (!first) out << ",\n";
    first = false;
    out << "  ";
    write_ident(out, c.name);
    out << " " << type_keyword(c.type);
    if (c.length) {
      out << "(" << *c.length;
      if (c.scale) out << ", " << *c.scale;
      out << ")";
    }
    if (!c.nullable) out << " NOT NULL";
    if (c.default_value) out << " DEFAULT " << *c.default_value;
  }
  if (!table.primary_key.empty()) {
    out << ",\n  PRIMARY KEY (";
    write_ident_list(out, table.primary_key);
    out << ")";
  }
  for (const auto& uk : table.uniques) {
    out << ",\n  UNIQUE (";
    write_ident_list(out, uk);
    out << ")";
  }
  for (const auto& fk : table.foreign_keys) {
    out << ",\n  FOREIGN KEY (";
    write_ident_list(out, fk.columns);
    out << ") REFERENCES ";
    write_ident(out, fk.referenced_table);
    if (!fk.referenced_columns.empty()) {
      out << " (";
      write_ident_list(out, fk.referenced_columns);
      out << ")";
    }
  }
  out << "\n);\n";
  return out.str();
}

std::string canonical_ddl(const SchemaAst& schema) {
  std::string out;
  for (const auto& t : schema.tables) out += canonical_ddl(t);
  return out;
}

}  // namespace rdb2owl
