#include "sql_lexer.hpp"

#include <cctype>

#include "rdb2owl/schema.hpp"

namespace rdb2owl::detail {

bool Token::is_keyword(std::string_view kw) const {
  return kind == TokenKind::Ident && !quoted && iequals(text, kw);
}

namespace {

struct Cursor {
  std::string_view src;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  bool done() const { return pos >= src.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < src.size() ? src[pos + ahead] : '\0';
  }
  char advance() {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    return c;
  }
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

}  // namespace

LexResult lex_sql(std::string_view text) {
  LexResult result;
  Cursor cur{text};

  auto fail = [&](std::string msg, int line, int column) {
    result.ok = false;
    result.error = {std::move(msg), line, column};
  };

  while (!cur.done()) {
    char c = cur.peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }
    if (c == '-' && cur.peek(1) == '-') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }
    if (c == '/' && cur.peek(1) == '*') {
      int line = cur.line, col = cur.column;
      cur.advance();
      cur.advance();
      bool closed = false;
      while (!cur.done()) {
        if (cur.peek() == '*' && cur.peek(1) == '/') {
          cur.advance();
          cur.advance();
          closed = true;
          break;
        }
        cur.advance();
      }
      if (!closed) {
        fail("unterminated block comment", line, col);
        return result;
      }
      continue;
    }

    Token tok;
    tok.line = cur.line;
    tok.column = cur.column;

    if (is_ident_start(c)) {
      std::string text_out;
      while (!cur.done() && is_ident_part(cur.peek())) text_out += cur.advance();
      tok.kind = TokenKind::Ident;
      tok.text = text_out;
      tok.raw = text_out;
      result.tokens.push_back(std::move(tok));
      continue;
    }
    if (c == '"' || c == '`') {
      char quote = cur.advance();
      std::string text_out;
      bool closed = false;
      while (!cur.done()) {
        char d = cur.advance();
        if (d == quote) {
          if (cur.peek() == quote) {  // doubled quote = literal quote char
            text_out += quote;
            cur.advance();
          } else {
            closed = true;
            break;
          }
        } else {
          text_out += d;
        }
      }
      if (!closed) {
        fail("unterminated quoted identifier", tok.line, tok.column);
        return result;
      }
      tok.kind = TokenKind::Ident;
      tok.quoted = true;
      tok.text = text_out;
      tok.raw = std::string(1, quote) + text_out + std::string(1, quote);
      result.tokens.push_back(std::move(tok));
      continue;
    }
    if (c == '\'') {
      cur.advance();
      std::string text_out;
      std::string raw = "'";
      bool closed = false;
      while (!cur.done()) {
        char d = cur.advance();
        raw += d;
        if (d == '\'') {
          if (cur.peek() == '\'') {  // '' unescapes to '
            text_out += '\'';
            raw += cur.advance();
          } else {
            closed = true;
            break;
          }
        } else {
          text_out += d;
        }
      }
      if (!closed) {
        fail("unterminated string literal", tok.line, tok.column);
        return result;
      }
      tok.kind = TokenKind::String;
      tok.text = text_out;
      tok.raw = raw;
      result.tokens.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && std::isdigit(static_cast<unsigned char>(cur.peek(1))))) {
      std::string text_out;
      if (c == '-' || c == '+') text_out += cur.advance();
      while (!cur.done() && (std::isdigit(static_cast<unsigned char>(cur.peek())) ||
                             cur.peek() == '.' || cur.peek() == 'e' || cur.peek() == 'E' ||
                             ((cur.peek() == '-' || cur.peek() == '+') &&
                              (text_out.back() == 'e' || text_out.back() == 'E'))))
        text_out += cur.advance();
      tok.kind = TokenKind::Number;
      tok.text = text_out;
      tok.raw = text_out;
      result.tokens.push_back(std::move(tok));
      continue;
    }
    if (c == '(' || c == ')' || c == ',' || c == ';' || c == '.' || c == '=' || c == '*') {
      cur.advance();
      tok.kind = TokenKind::Punct;
      tok.text = std::string(1, c);
      tok.raw = tok.text;
      result.tokens.push_back(std::move(tok));
      continue;
    }
    fail(std::string("unexpected character '") + c + "'", cur.line, cur.column);
    return result;
  }

  Token end;
  end.kind = TokenKind::End;
  end.line = cur.line;
  end.column = cur.column;
  result.tokens.push_back(end);
  return result;
}

}  // namespace rdb2owl::detail
