#ifndef RDB2OWL_SQL_LEXER_HPP
#define RDB2OWL_SQL_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace rdb2owl::detail {

enum class TokenKind {
  Ident,      // bare, "quoted" or `quoted`; text holds the unquoted spelling
  Number,
  String,     // 'literal'; text holds the unescaped content
  Punct,      // ( ) , ; . =
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;     // unquoted/unescaped value
  std::string raw;      // exact source spelling (used for DEFAULT literals)
  bool quoted = false;  // identifier was quoted
  int line = 1;
  int column = 1;

  bool is_punct(char c) const { return kind == TokenKind::Punct && raw.size() == 1 && raw[0] == c; }
  bool is_keyword(std::string_view kw) const;
};

struct LexError {
  std::string message;
  int line = 1;
  int column = 1;
};

// Tokenizes SQL source; skips whitespace, -- and /* */ comments.
// On a lexical error the token stream ends early and `error` is set.
struct LexResult {
  std::vector<Token> tokens;
  bool ok = true;
  LexError error;
};

LexResult lex_sql(std::string_view text);

}  // namespace rdb2owl::detail

#endif
