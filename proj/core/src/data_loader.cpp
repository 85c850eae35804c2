#include "rdb2owl/data_loader.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sql_lexer.hpp"

namespace rdb2owl {

namespace {

struct CsvCell {
  std::string text;
  bool quoted = false;
};

// One CSV record; handles quoted fields, "" escapes and embedded newlines.
// Returns false at end of input.
bool read_record(std::istream& in, std::vector<CsvCell>& out, long& line) {
  out.clear();
  int c = in.get();
  if (c == EOF) return false;
  CsvCell cell;
  bool in_quotes = false;
  for (;;) {
    if (c == EOF) {
      out.push_back(cell);
      return true;
    }
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          cell.text += '"';
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell.text += static_cast<char>(c);
      }
    } else if (c == '"' && cell.text.empty() && !cell.quoted) {
      in_quotes = true;
      cell.quoted = true;
    } else if (c == ',') {
      out.push_back(cell);
      cell = {};
    } else if (c == '\r' && in.peek() == '\n') {
      in.get();
      ++line;
      out.push_back(cell);
      return true;
    } else if (c == '\n') {
      ++line;
      out.push_back(cell);
      return true;
    } else {
      cell.text += static_cast<char>(c);
    }
    c = in.get();
  }
}

}  // namespace

Recordset load_csv(const std::filesystem::path& path, const TableDef& table, Diagnostics& diags) {
  Recordset rs;
  rs.relation_name = table.name;

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    diags.error(diag::IoError, Location::at(path.string(), 0, 0),
                "cannot open file for reading");
    return rs;
  }

  long line = 1;
  std::vector<CsvCell> record;
  if (!read_record(in, record, line)) {
    diags.error(diag::HeaderMismatch, Location::at(path.string(), 1, 1),
                "file is empty; a header row is required");
    return rs;
  }

  for (const auto& cell : record) rs.header.push_back(cell.text);

  // Header must be a permutation of the declared columns.
  std::vector<std::string> missing, extra;
  for (const auto& col : table.columns) {
    bool found = false;
    for (const auto& h : rs.header)
      if (iequals(h, col.name)) found = true;
    if (!found) missing.push_back(col.name);
  }
  for (const auto& h : rs.header)
    if (!table.find_column(h)) extra.push_back(h);
  if (!missing.empty() || !extra.empty() || rs.header.size() != table.columns.size()) {
    std::ostringstream msg;
    msg << "header does not match columns of table '" << table.name << "'";
    if (!missing.empty()) {
      msg << "; missing:";
      for (const auto& m : missing) msg << " " << m;
    }
    if (!extra.empty()) {
      msg << "; extra:";
      for (const auto& e : extra) msg << " " << e;
    }
    diags.error(diag::HeaderMismatch, Location::at(path.string(), 1, 1), msg.str());
    return rs;
  }

  while (true) {
    long record_line = line;
    if (!read_record(in, record, line)) break;
    if (record.size() == 1 && record[0].text.empty() && !record[0].quoted && in.eof())
      break;  // trailing newline
    if (record.size() != rs.header.size()) {
      std::ostringstream msg;
      msg << "row has " << record.size() << " cells, expected " << rs.header.size();
      diags.error(diag::RowArityError,
                  Location::at(path.string(), static_cast<int>(record_line), 1), msg.str());
      continue;
    }
    Row row;
    row.line = record_line;
    for (const auto& cell : record) {
      if (cell.text.empty() && !cell.quoted)
        row.cells.push_back(std::nullopt);  // unquoted empty = NULL
      else
        row.cells.push_back(cell.text);
    }
    rs.rows.push_back(std::move(row));
  }
  return rs;
}

namespace {

using detail::Token;
using detail::TokenKind;

class InsertParser {
 public:
  InsertParser(std::vector<Token> tokens, const SchemaAst& schema, Diagnostics& diags,
               std::string filename)
      : tokens_(std::move(tokens)), schema_(schema), diags_(diags),
        filename_(std::move(filename)) {}

  std::vector<Recordset> parse() {
    while (!failed_ && peek().kind != TokenKind::End) {
      if (peek().is_keyword("INSERT")) {
        if (!parse_insert()) break;
      } else {
        const Token& t = peek();
        std::string head = t.kind == TokenKind::Ident ? t.text : t.raw;
        diags_.note(diag::SkippedStatement, Location::at(filename_, t.line, t.column),
                    "skipped unsupported statement starting with '" + head + "'");
        while (peek().kind != TokenKind::End && !peek().is_punct(';')) advance();
        if (peek().is_punct(';')) advance();
      }
    }
    std::vector<Recordset> out;
    for (const auto& name : order_) out.push_back(std::move(recordsets_.at(name)));
    return out;
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

  Recordset& recordset_for(const TableDef& table) {
    auto key = to_lower(table.name);
    auto it = recordsets_.find(key);
    if (it == recordsets_.end()) {
      Recordset rs;
      rs.relation_name = table.name;
      for (const auto& c : table.columns) rs.header.push_back(c.name);
      it = recordsets_.emplace(key, std::move(rs)).first;
      order_.push_back(key);
    }
    return it->second;
  }

  bool parse_insert() {
    const Token& start = peek();
    advance();  // INSERT
    if (!peek().is_keyword("INTO")) {
      syntax_error("INTO");
      return false;
    }
    advance();
    if (peek().kind != TokenKind::Ident) {
      syntax_error("table name");
      return false;
    }
    Token table_tok = advance();
    const TableDef* table = schema_.find_table(table_tok.text);
    if (!table) {
      error(diag::UnknownTable, table_tok.line, table_tok.column,
            "INSERT into unknown table '" + table_tok.text + "'");
      return false;
    }

    // Map each inserted value position to a declared column index.
    std::vector<std::size_t> column_map;
    if (peek().is_punct('(')) {
      advance();
      do {
        if (peek().kind != TokenKind::Ident) {
          syntax_error("column name");
          return false;
        }
        Token col = advance();
        bool found = false;
        for (std::size_t i = 0; i < table->columns.size(); ++i) {
          if (iequals(table->columns[i].name, col.text)) {
            column_map.push_back(i);
            found = true;
            break;
          }
        }
        if (!found) {
          error(diag::UnknownColumn, col.line, col.column,
                "unknown column '" + col.text + "' in table '" + table->name + "'");
          return false;
        }
      } while (peek().is_punct(',') && (advance(), true));
      if (!peek().is_punct(')')) {
        syntax_error("')'");
        return false;
      }
      advance();
    } else {
      for (std::size_t i = 0; i < table->columns.size(); ++i) column_map.push_back(i);
    }

    if (!peek().is_keyword("VALUES")) {
      syntax_error("VALUES");
      return false;
    }
    advance();

    Recordset& rs = recordset_for(*table);
    do {
      if (!peek().is_punct('(')) {
        syntax_error("'('");
        return false;
      }
      const Token& tuple_start = peek();
      advance();
      Row row;
      row.line = tuple_start.line;
      row.cells.assign(table->columns.size(), std::nullopt);
      std::size_t n = 0;
      do {
        const Token& v = peek();
        std::optional<std::string> cell;
        if (v.kind == TokenKind::Ident && v.is_keyword("NULL")) {
          advance();
        } else if (v.kind == TokenKind::String) {
          cell = advance().text;
        } else if (v.kind == TokenKind::Number) {
          cell = advance().text;
        } else if (v.kind == TokenKind::Ident &&
                   (v.is_keyword("TRUE") || v.is_keyword("FALSE"))) {
          cell = to_lower(advance().text);
        } else {
          syntax_error("value literal");
          return false;
        }
        if (n < column_map.size()) row.cells[column_map[n]] = std::move(cell);
        ++n;
      } while (peek().is_punct(',') && (advance(), true));
      if (!peek().is_punct(')')) {
        syntax_error("')'");
        return false;
      }
      advance();
      if (n != column_map.size()) {
        std::ostringstream msg;
        msg << "tuple has " << n << " values, expected " << column_map.size();
        error(diag::RowArityError, tuple_start.line, tuple_start.column, msg.str());
        return false;
      }
      rs.rows.push_back(std::move(row));
    } while (peek().is_punct(',') && (advance(), true));

    if (!peek().is_punct(';')) {
      syntax_error("';'");
      return false;
    }
    advance();
    (void)start;
    return true;
  }

  std::vector<Token> tokens_;
  const SchemaAst& schema_;
  Diagnostics& diags_;
  std::string filename_;
  std::size_t pos_ = 0;
  bool failed_ = false;
  std::map<std::string, Recordset> recordsets_;
  std::vector<std::string> order_;
};

}  // namespace

std::vector<Recordset> parse_inserts(std::string_view text, const SchemaAst& schema,
                                     Diagnostics& diags, std::string_view filename) {
  auto lexed = detail::lex_sql(text);
  if (!lexed.ok) {
    diags.error(diag::SyntaxError,
                Location::at(std::string(filename), lexed.error.line, lexed.error.column),
                lexed.error.message);
    return {};
  }
  return InsertParser(std::move(lexed.tokens), schema, diags, std::string(filename)).parse();
}

}  // namespace rdb2owl
