#include "rdf_readback.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace rdb2owl::testing {

namespace {

// ---------------------------------------------------------------------------
// Minimal namespace-aware XML parser.

struct XmlNode {
  std::string name;  // as written (possibly prefixed)
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<XmlNode> children;
  std::string text;

  const std::string* attr(const std::string& key) const {
    for (const auto& [k, v] : attrs)
      if (k == key) return &v;
    return nullptr;
  }
};

class XmlParser {
 public:
  explicit XmlParser(const std::string& text) : src_(text) {}

  XmlNode parse_document() {
    skip_prolog();
    XmlNode root = parse_element();
    skip_misc();
    if (pos_ != src_.size()) fail("content after document element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ReadbackError("XML parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const {
    return src_.compare(pos_, s.size(), s) == 0;
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  void skip_comment() {
    if (!starts_with("<!--")) return;
    auto end = src_.find("-->", pos_ + 4);
    if (end == std::string::npos) fail("unterminated comment");
    pos_ = end + 3;
  }
  void skip_prolog() {
    skip_ws();
    if (starts_with("<?xml")) {
      auto end = src_.find("?>", pos_);
      if (end == std::string::npos) fail("unterminated XML declaration");
      pos_ = end + 2;
    }
    skip_misc();
  }
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) {
        skip_comment();
        continue;
      }
      break;
    }
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == ':';
  }
  std::string parse_name() {
    if (!name_start(peek())) fail("expected name");
    std::string out;
    while (name_char(peek())) out += src_[pos_++];
    return out;
  }

  std::string unescape(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '&') {
        out += s[i];
        continue;
      }
      auto semi = s.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity reference");
      std::string_view ent = s.substr(i + 1, semi - i - 1);
      if (ent == "amp")
        out += '&';
      else if (ent == "lt")
        out += '<';
      else if (ent == "gt")
        out += '>';
      else if (ent == "quot")
        out += '"';
      else if (ent == "apos")
        out += '\'';
      else if (!ent.empty() && ent[0] == '#') {
        int code = ent[1] == 'x' ? std::stoi(std::string(ent.substr(2)), nullptr, 16)
                                 : std::stoi(std::string(ent.substr(1)));
        if (code < 0 || code > 127) fail("unsupported character reference");
        out += static_cast<char>(code);
      } else {
        fail("unknown entity &" + std::string(ent) + ";");
      }
      i = semi;
    }
    return out;
  }

  XmlNode parse_element() {
    if (peek() != '<') fail("expected '<'");
    ++pos_;
    XmlNode node;
    node.name = parse_name();
    for (;;) {
      skip_ws();
      if (peek() == '/' && peek(1) == '>') {
        pos_ += 2;
        return node;
      }
      if (peek() == '>') {
        ++pos_;
        break;
      }
      std::string key = parse_name();
      skip_ws();
      if (peek() != '=') fail("expected '=' after attribute name");
      ++pos_;
      skip_ws();
      char quote = peek();
      if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
      ++pos_;
      std::string raw;
      while (peek() != quote) {
        if (pos_ >= src_.size()) fail("unterminated attribute value");
        if (peek() == '<') fail("'<' in attribute value");
        raw += src_[pos_++];
      }
      ++pos_;
      for (const auto& [k, v] : node.attrs)
        if (k == key) fail("duplicate attribute " + key);
      node.attrs.emplace_back(key, unescape(raw));
    }
    // Content.
    for (;;) {
      if (pos_ >= src_.size()) fail("unterminated element " + node.name);
      if (starts_with("<!--")) {
        skip_comment();
        continue;
      }
      if (peek() == '<' && peek(1) == '/') {
        pos_ += 2;
        std::string close = parse_name();
        if (close != node.name)
          fail("mismatched close tag: " + close + " for " + node.name);
        skip_ws();
        if (peek() != '>') fail("expected '>' in close tag");
        ++pos_;
        return node;
      }
      if (peek() == '<') {
        node.children.push_back(parse_element());
        continue;
      }
      std::string raw;
      while (pos_ < src_.size() && peek() != '<') raw += src_[pos_++];
      node.text += unescape(raw);
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// RDF interpretation of the parsed tree.

struct NsEnv {
  std::map<std::string, std::string> prefixes;  // "" = default namespace
  std::string base;
};

constexpr const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr const char* kXsdString = "http://www.w3.org/2001/XMLSchema#string";

NsEnv apply_ns(const NsEnv& outer, const XmlNode& node) {
  NsEnv env = outer;
  for (const auto& [k, v] : node.attrs) {
    if (k == "xmlns")
      env.prefixes[""] = v;
    else if (k.rfind("xmlns:", 0) == 0)
      env.prefixes[k.substr(6)] = v;
    else if (k == "xml:base")
      env.base = v;
  }
  return env;
}

std::string expand_name(const NsEnv& env, const std::string& name) {
  auto colon = name.find(':');
  std::string prefix = colon == std::string::npos ? "" : name.substr(0, colon);
  std::string local = colon == std::string::npos ? name : name.substr(colon + 1);
  auto it = env.prefixes.find(prefix);
  if (it == env.prefixes.end())
    throw ReadbackError("undeclared namespace prefix '" + prefix + "'");
  return it->second + local;
}

std::string resolve(const NsEnv& env, const std::string& ref) {
  if (!ref.empty() && ref[0] == '#') return env.base + ref;
  auto colon = ref.find(':');
  if (colon != std::string::npos && colon > 0) return ref;  // absolute
  if (ref.empty()) return env.base;
  throw ReadbackError("cannot resolve relative reference '" + ref + "'");
}

bool only_whitespace(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

TripleNode subject_of(const NsEnv& env, const XmlNode& node) {
  if (const auto* id = node.attr("rdf:ID")) return TripleNode::iri(env.base + "#" + *id);
  if (const auto* about = node.attr("rdf:about")) return TripleNode::iri(resolve(env, *about));
  if (const auto* blank = node.attr("rdf:nodeID")) return TripleNode::blank(*blank);
  throw ReadbackError("node element " + node.name + " has no subject attribute");
}

void read_node_element(const NsEnv& outer, const XmlNode& node, std::vector<Triple>& out) {
  NsEnv env = apply_ns(outer, node);
  TripleNode subject = subject_of(env, node);
  std::string type_iri = expand_name(env, node.name);
  if (type_iri != std::string(kRdfNs) + "Description")
    out.push_back({subject, std::string(kRdfNs) + "type", TripleNode::iri(type_iri)});

  for (const auto& prop : node.children) {
    NsEnv penv = apply_ns(env, prop);
    std::string predicate = expand_name(penv, prop.name);
    if (!prop.children.empty())
      throw ReadbackError("nested node elements are not part of the emitted subset");
    if (const auto* res = prop.attr("rdf:resource")) {
      if (!only_whitespace(prop.text)) throw ReadbackError("resource property with text");
      out.push_back({subject, predicate, TripleNode::iri(resolve(penv, *res))});
    } else if (const auto* blank = prop.attr("rdf:nodeID")) {
      out.push_back({subject, predicate, TripleNode::blank(*blank)});
    } else if (const auto* dt = prop.attr("rdf:datatype")) {
      out.push_back({subject, predicate, TripleNode::literal(prop.text, *dt)});
    } else {
      out.push_back({subject, predicate, TripleNode::literal(prop.text, kXsdString)});
    }
  }
}

}  // namespace

std::vector<Triple> parse_rdfxml(const std::string& text) {
  XmlParser parser(text);
  XmlNode root = parser.parse_document();
  NsEnv env;
  env = apply_ns(env, root);
  if (expand_name(env, root.name) != std::string(kRdfNs) + "RDF")
    throw ReadbackError("document element is not rdf:RDF");
  std::vector<Triple> out;
  for (const auto& child : root.children) read_node_element(env, child, out);
  return out;
}

// ---------------------------------------------------------------------------
// Turtle parser (the emitted subset: @prefix directives and one triple per
// statement, terms being prefixed names, <IRIs>, _:labels and typed strings).

namespace {

class TurtleParser {
 public:
  explicit TurtleParser(const std::string& text) : src_(text) {}

  std::vector<Triple> parse() {
    std::vector<Triple> out;
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size()) break;
      if (starts_with("@prefix")) {
        parse_prefix();
        continue;
      }
      TripleNode s = parse_term();
      skip_ws();
      TripleNode p = parse_term();
      skip_ws();
      TripleNode o = parse_term();
      skip_ws();
      expect('.');
      if (p.kind != TripleNode::Kind::Iri)
        throw ReadbackError("predicate must be an IRI");
      out.push_back({s, p.value, o});
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ReadbackError("Turtle parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return src_.compare(pos_, s.size(), s) == 0; }
  void skip_ws() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (peek() == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_iri_ref() {
    expect('<');
    std::string out;
    while (peek() != '>') {
      if (pos_ >= src_.size()) fail("unterminated IRI");
      out += src_[pos_++];
    }
    ++pos_;
    return out;
  }

  void parse_prefix() {
    pos_ += 7;  // "@prefix"
    skip_ws();
    std::string prefix;
    while (peek() != ':') {
      if (pos_ >= src_.size()) fail("unterminated prefix name");
      prefix += src_[pos_++];
    }
    ++pos_;
    skip_ws();
    std::string iri = parse_iri_ref();
    skip_ws();
    expect('.');
    prefixes_[prefix] = iri;
  }

  static bool local_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string parse_pname_or_a() {
    std::string prefix;
    while (local_char(peek())) prefix += src_[pos_++];
    if (peek() != ':') {
      if (prefix == "a") return std::string(kRdfNs) + "type";
      fail("expected prefixed name, got '" + prefix + "'");
    }
    ++pos_;
    std::string local;
    while (local_char(peek())) local += src_[pos_++];
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    return it->second + local;
  }

  TripleNode parse_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return TripleNode::iri(parse_iri_ref());
    if (c == '_' && peek(1) == ':') {
      pos_ += 2;
      std::string label;
      while (local_char(peek())) label += src_[pos_++];
      return TripleNode::blank(label);
    }
    if (c == '"') {
      ++pos_;
      std::string value;
      for (;;) {
        if (pos_ >= src_.size()) fail("unterminated literal");
        char d = src_[pos_++];
        if (d == '"') break;
        if (d == '\\') {
          char e = src_[pos_++];
          switch (e) {
            case 'n': value += '\n'; break;
            case 'r': value += '\r'; break;
            case 't': value += '\t'; break;
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            default: fail("unknown escape");
          }
        } else {
          value += d;
        }
      }
      std::string datatype = kXsdString;
      if (peek() == '^' && peek(1) == '^') {
        pos_ += 2;
        datatype = peek() == '<' ? parse_iri_ref() : parse_pname_or_a();
      }
      return TripleNode::literal(value, datatype);
    }
    return TripleNode::iri(parse_pname_or_a());
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace

std::vector<Triple> parse_turtle(const std::string& text) {
  return TurtleParser(text).parse();
}

std::string to_string(const Triple& t) {
  auto node = [](const TripleNode& n) {
    switch (n.kind) {
      case TripleNode::Kind::Iri: return "<" + n.value + ">";
      case TripleNode::Kind::Blank: return "_:" + n.value;
      case TripleNode::Kind::Literal: return "\"" + n.value + "\"^^<" + n.datatype + ">";
    }
    return std::string();
  };
  return node(t.subject) + " <" + t.predicate + "> " + node(t.object);
}

bool same_triples(std::vector<Triple> a, std::vector<Triple> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string diff_triples(std::vector<Triple> a, std::vector<Triple> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Triple> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  std::ostringstream out;
  for (std::size_t i = 0; i < only_a.size() && i < 10; ++i)
    out << "only in first:  " << to_string(only_a[i]) << "\n";
  for (std::size_t i = 0; i < only_b.size() && i < 10; ++i)
    out << "only in second: " << to_string(only_b[i]) << "\n";
  return out.str();
}

}  // namespace rdb2owl::testing
