#include "rdb2owl/ddl_parser.hpp"

#include <algorithm>
#include <set>

#include "sql_lexer.hpp"

namespace rdb2owl {

using detail::Token;
using detail::TokenKind;

namespace {

class DdlParser {
 public:
  DdlParser(std::vector<Token> tokens, Diagnostics& diags, std::string filename)
      : tokens_(std::move(tokens)), diags_(diags), filename_(std::move(filename)) {}

  SchemaAst parse() {
    SchemaAst schema;
    while (!failed_ && !at_end()) {
      if (peek().is_keyword("CREATE") && peek(1).is_keyword("TABLE")) {
        TableDef table;
        if (!parse_create_table(table)) break;
        if (schema.find_table(table.name)) {
          error(diag::DuplicateTable, table.line, table.column,
                "table '" + table.name + "' defined more than once");
          break;
        }
        schema.tables.push_back(std::move(table));
      } else {
        skip_statement();
      }
    }
    return schema;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }

  void error(const char* code, int line, int column, std::string message) {
    if (failed_) return;
    failed_ = true;
    diags_.error(code, Location::at(filename_, line, column), std::move(message));
  }
  void syntax_error(std::string expected) {
    const Token& t = peek();
    std::string got = t.kind == TokenKind::End ? "end of input" : "'" + t.raw + "'";
    error(diag::SyntaxError, t.line, t.column, "expected " + expected + ", got " + got);
  }

  bool expect_punct(char c) {
    if (peek().is_punct(c)) {
      advance();
      return true;
    }
    syntax_error(std::string("'") + c + "'");
    return false;
  }
  bool expect_keyword(std::string_view kw) {
    if (peek().is_keyword(kw)) {
      advance();
      return true;
    }
    syntax_error(std::string(kw));
    return false;
  }
  bool expect_ident(std::string& out) {
    if (peek().kind == TokenKind::Ident) {
      // Bare structural keywords do not make valid identifiers here.
      out = advance().text;
      return true;
    }
    syntax_error("identifier");
    return false;
  }

  // Statements we do not understand are skipped up to the next ';'.
  void skip_statement() {
    const Token& first = peek();
    std::string head = first.kind == TokenKind::Ident ? first.text : first.raw;
    diags_.note(diag::SkippedStatement, Location::at(filename_, first.line, first.column),
                "skipped unsupported statement starting with '" + head + "'");
    while (!at_end() && !peek().is_punct(';')) advance();
    if (!at_end()) advance();  // ';'
  }

  bool parse_ident_list(std::vector<std::string>& out) {
    if (!expect_punct('(')) return false;
    do {
      std::string name;
      if (!expect_ident(name)) return false;
      out.push_back(std::move(name));
    } while (peek().is_punct(',') && (advance(), true));
    return expect_punct(')');
  }

  bool parse_type(ColumnDef& col) {
    const Token& t = peek();
    if (t.kind != TokenKind::Ident) {
      syntax_error("type name");
      return false;
    }
    std::string keyword = advance().text;
    if (iequals(keyword, "DOUBLE") && peek().is_keyword("PRECISION")) {
      advance();
      keyword = "DOUBLE PRECISION";
    }
    auto type = parse_type_keyword(keyword);
    if (!type) {
      error(diag::UnknownType, t.line, t.column, "unsupported type '" + keyword + "'");
      return false;
    }
    col.type = *type;
    if (peek().is_punct('(')) {
      if (!type_admits_length(*type)) {
        error(diag::SyntaxError, peek().line, peek().column,
              "type " + std::string(type_keyword(*type)) + " does not take a length");
        return false;
      }
      advance();
      if (peek().kind != TokenKind::Number) {
        syntax_error("length");
        return false;
      }
      int length = std::stoi(advance().text);
      if (length <= 0) {
        error(diag::SyntaxError, t.line, t.column, "length must be positive");
        return false;
      }
      col.length = length;
      if (peek().is_punct(',')) {
        if (*type != SqlType::Decimal) {
          syntax_error("')'");
          return false;
        }
        advance();
        if (peek().kind != TokenKind::Number) {
          syntax_error("scale");
          return false;
        }
        col.scale = std::stoi(advance().text);
      }
      if (!expect_punct(')')) return false;
    }
    return true;
  }

  bool parse_default_literal(ColumnDef& col) {
    const Token& t = peek();
    if (t.kind == TokenKind::Number || t.kind == TokenKind::String ||
        t.kind == TokenKind::Ident) {
      col.default_value = advance().raw;
      return true;
    }
    syntax_error("default literal");
    return false;
  }

  bool parse_column_def(TableDef& table, ColumnDef& col) {
    if (!expect_ident(col.name)) return false;
    if (!parse_type(col)) return false;
    // Inline constraints, normalized into the table-level lists.
    for (;;) {
      const Token& t = peek();
      if (t.is_keyword("NOT") && peek(1).is_keyword("NULL")) {
        advance();
        advance();
        col.nullable = false;
      } else if (t.is_keyword("NULL")) {
        advance();
        col.nullable = true;
      } else if (t.is_keyword("PRIMARY") && peek(1).is_keyword("KEY")) {
        advance();
        advance();
        if (!table.primary_key.empty()) {
          error(diag::SyntaxError, t.line, t.column,
                "table '" + table.name + "' has more than one primary key");
          return false;
        }
        table.primary_key.push_back(col.name);
        col.nullable = false;
      } else if (t.is_keyword("UNIQUE")) {
        advance();
        table.uniques.push_back({col.name});
      } else if (t.is_keyword("DEFAULT")) {
        advance();
        if (!parse_default_literal(col)) return false;
      } else if (t.is_keyword("REFERENCES")) {
        advance();
        ForeignKeyClause fk;
        fk.line = t.line;
        fk.column = t.column;
        fk.columns.push_back(col.name);
        if (!expect_ident(fk.referenced_table)) return false;
        if (peek().is_punct('(')) {
          if (!parse_ident_list(fk.referenced_columns)) return false;
        }
        table.foreign_keys.push_back(std::move(fk));
      } else {
        break;
      }
    }
    return true;
  }

  bool parse_table_constraint(TableDef& table) {
    const Token& t = peek();
    if (t.is_keyword("CONSTRAINT")) {
      advance();
      std::string name;
      if (!expect_ident(name)) return false;  // constraint names are discarded
      return parse_table_constraint(table);
    }
    if (t.is_keyword("PRIMARY")) {
      advance();
      if (!expect_keyword("KEY")) return false;
      if (!table.primary_key.empty()) {
        error(diag::SyntaxError, t.line, t.column,
              "table '" + table.name + "' has more than one primary key");
        return false;
      }
      return parse_ident_list(table.primary_key);
    }
    if (t.is_keyword("UNIQUE")) {
      advance();
      std::vector<std::string> cols;
      if (!parse_ident_list(cols)) return false;
      table.uniques.push_back(std::move(cols));
      return true;
    }
    if (t.is_keyword("FOREIGN")) {
      advance();
      if (!expect_keyword("KEY")) return false;
      ForeignKeyClause fk;
      fk.line = t.line;
      fk.column = t.column;
      if (!parse_ident_list(fk.columns)) return false;
      if (!expect_keyword("REFERENCES")) return false;
      if (!expect_ident(fk.referenced_table)) return false;
      if (peek().is_punct('(')) {
        if (!parse_ident_list(fk.referenced_columns)) return false;
      }
      table.foreign_keys.push_back(std::move(fk));
      return true;
    }
    syntax_error("column definition or table constraint");
    return false;
  }

  bool is_constraint_start() const {
    const Token& t = peek();
    return t.is_keyword("PRIMARY") || t.is_keyword("UNIQUE") || t.is_keyword("FOREIGN") ||
           t.is_keyword("CONSTRAINT");
  }

  bool check_table(const TableDef& table) {
    std::set<std::string> seen;
    for (const auto& c : table.columns) {
      if (!seen.insert(to_lower(c.name)).second) {
        error(diag::DuplicateColumn, table.line, table.column,
              "column '" + c.name + "' defined more than once in table '" + table.name + "'");
        return false;
      }
    }
    auto check_cols = [&](const std::vector<std::string>& cols, const char* what) {
      for (const auto& name : cols) {
        if (!table.find_column(name)) {
          error(diag::DanglingKeyColumn, table.line, table.column,
                std::string(what) + " names unknown column '" + name + "' in table '" +
                    table.name + "'");
          return false;
        }
      }
      return true;
    };
    if (!check_cols(table.primary_key, "primary key")) return false;
    for (const auto& uk : table.uniques)
      if (!check_cols(uk, "unique key")) return false;
    for (const auto& fk : table.foreign_keys)
      if (!check_cols(fk.columns, "foreign key")) return false;
    return true;
  }

  bool parse_create_table(TableDef& table) {
    table.line = peek().line;
    table.column = peek().column;
    advance();  // CREATE
    advance();  // TABLE
    if (!expect_ident(table.name)) return false;
    if (!expect_punct('(')) return false;
    do {
      if (is_constraint_start()) {
        if (!parse_table_constraint(table)) return false;
      } else {
        ColumnDef col;
        if (!parse_column_def(table, col)) return false;
        table.columns.push_back(std::move(col));
      }
    } while (peek().is_punct(',') && (advance(), true));
    if (!expect_punct(')')) return false;
    if (!expect_punct(';')) return false;
    // Primary key columns are implicitly NOT NULL.
    for (const auto& pk : table.primary_key)
      for (auto& c : table.columns)
        if (iequals(c.name, pk)) c.nullable = false;
    return check_table(table);
  }

  std::vector<Token> tokens_;
  Diagnostics& diags_;
  std::string filename_;
  std::size_t pos_ = 0;
  bool failed_ = false;
};

}  // namespace

SchemaAst parse_ddl(std::string_view text, Diagnostics& diags, std::string_view filename) {
  auto lexed = detail::lex_sql(text);
  if (!lexed.ok) {
    diags.error(diag::SyntaxError,
                Location::at(std::string(filename), lexed.error.line, lexed.error.column),
                lexed.error.message);
    return {};
  }
  return DdlParser(std::move(lexed.tokens), diags, std::string(filename)).parse();
}

}  // namespace rdb2owl
