#include "rdb2owl/convert.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "rdb2owl/owl_builder.hpp"

namespace rdb2owl {

namespace {

// Escapes one primary-key value into an IRI segment. Keeps [A-Za-z0-9-];
// everything else (including '_') becomes _xHH. A leading lowercase 'x' is
// escaped too, so after a '_' separator an "x" always means an escape and
// the minted string decodes to exactly one (class, values) tuple.
std::string sanitize_segment(std::string_view value) {
  std::string out;
  auto escape = [&](unsigned char c) {
    char buf[5];
    std::snprintf(buf, sizeof(buf), "_x%02X", c);
    out += buf;
  };
  for (std::size_t i = 0; i < value.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(value[i]);
    bool keep = (std::isalnum(c) || c == '-');
    if (i == 0 && c == 'x') keep = false;
    if (keep)
      out += static_cast<char>(c);
    else
      escape(c);
  }
  return out;
}

}  // namespace

std::string mint_iri(std::string_view class_name, const std::vector<std::string>& pk_values,
                     std::string_view base) {
  std::string out(base);
  out += sanitize_ncname(class_name);
  for (const auto& v : pk_values) {
    out += '_';
    out += sanitize_segment(v);
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<std::string> canonical_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
  if (s == "0") return std::string("0");
  return (negative ? "-" : "") + std::string(s);
}

std::optional<std::string> canonical_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
  while (int_part.size() > 1 && int_part[0] == '0') int_part.remove_prefix(1);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
  std::string out = int_part.empty() ? "0" : std::string(int_part);
  if (!frac_part.empty()) out += "." + std::string(frac_part);
  if (out == "0" || out == "0.") return std::string("0");
  return (negative && out != "0" ? "-" : "") + out;
}

std::optional<std::string> canonical_double(std::string_view s) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  char buf[64];
  auto [end, ec2] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec2 != std::errc{}) return std::nullopt;
  return std::string(buf, end);
}

bool valid_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) || !all_digits(s.substr(8, 2)))
    return false;
  int year = std::stoi(std::string(s.substr(0, 4)));
  int month = std::stoi(std::string(s.substr(5, 2)));
  int day = std::stoi(std::string(s.substr(8, 2)));
  if (month < 1 || month > 12 || day < 1) return false;
  static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int max_day = days[month - 1];
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  if (month == 2 && leap) max_day = 29;
  return day <= max_day;
}

bool valid_time(std::string_view s) {
  if (s.size() < 8 || s[2] != ':' || s[5] != ':') return false;
  if (!all_digits(s.substr(0, 2)) || !all_digits(s.substr(3, 2)) || !all_digits(s.substr(6, 2)))
    return false;
  int h = std::stoi(std::string(s.substr(0, 2)));
  int m = std::stoi(std::string(s.substr(3, 2)));
  int sec = std::stoi(std::string(s.substr(6, 2)));
  if (h > 23 || m > 59 || sec > 59) return false;
  if (s.size() > 8) {
    if (s[8] != '.' || s.size() == 9) return false;
    if (!all_digits(s.substr(9))) return false;
  }
  return true;
}

}  // namespace

std::optional<CoercedLiteral> coerce_literal(std::string_view cell, SqlType type) {
  std::string datatype = map_type(type);
  switch (type) {
    case SqlType::Int:
    case SqlType::BigInt:
    case SqlType::SmallInt: {
      auto v = canonical_integer(cell);
      if (!v) return std::nullopt;
      return CoercedLiteral{*v, datatype};
    }
    case SqlType::Decimal: {
      auto v = canonical_decimal(cell);
      if (!v) return std::nullopt;
      return CoercedLiteral{*v, datatype};
    }
    case SqlType::Float: {
      auto v = canonical_double(cell);
      if (!v) return std::nullopt;
      return CoercedLiteral{*v, datatype};
    }
    case SqlType::Char:
    case SqlType::Varchar:
    case SqlType::Text:
      return CoercedLiteral{std::string(cell), datatype};
    case SqlType::Date:
      if (!valid_date(cell)) return std::nullopt;
      return CoercedLiteral{std::string(cell), datatype};
    case SqlType::Time:
      if (!valid_time(cell)) return std::nullopt;
      return CoercedLiteral{std::string(cell), datatype};
    case SqlType::Timestamp: {
      std::string s(cell);
      auto sep = s.find(' ');
      if (sep != std::string::npos) s[sep] = 'T';  // normalize the space form
      sep = s.find('T');
      if (sep == std::string::npos) return std::nullopt;
      if (!valid_date(std::string_view(s).substr(0, sep)) ||
          !valid_time(std::string_view(s).substr(sep + 1)))
        return std::nullopt;
      return CoercedLiteral{s, datatype};
    }
    case SqlType::Boolean: {
      if (cell == "1" || iequals(cell, "true")) return CoercedLiteral{"true", datatype};
      if (cell == "0" || iequals(cell, "false")) return CoercedLiteral{"false", datatype};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

// Column-name to cell-index mapping for one recordset.
std::optional<std::size_t> cell_index(const Recordset& rs, std::string_view column) {
  for (std::size_t i = 0; i < rs.header.size(); ++i)
    if (iequals(rs.header[i], column)) return i;
  return std::nullopt;
}

struct PendingTarget {
  std::string target_iri;
  std::string relation;
  long row;
};

}  // namespace

void convert_recordsets(const std::vector<Recordset>& data, const CdmModel& cdm,
                        OwlDocument& doc, Diagnostics& diags, const ConvertOptions& opts) {
  const std::string& base = doc.base_iri;
  std::vector<PendingTarget> pending;

  auto pk_cells = [&](const Recordset& rs, const Row& row,
                      const std::vector<std::string>& columns, long row_number,
                      std::vector<std::string>& out) {
    out.clear();
    for (const auto& col : columns) {
      auto idx = cell_index(rs, col);
      if (!idx || !row.cells[*idx]) {
        diags.error(diag::NullKeyCell,
                    Location::in_relation(rs.relation_name, row_number, col),
                    "key column '" + col + "' is NULL");
        return false;
      }
      out.push_back(*row.cells[*idx]);
    }
    return true;
  };

  // Base relations first so junction rows can attach to their individuals.
  for (const auto& rs : data) {
    if (cdm.find_junction(rs.relation_name)) continue;
    const CdmClass* cls = cdm.find_class(rs.relation_name);
    if (!cls) {
      diags.error(diag::UnknownRelation, Location::in_relation(rs.relation_name),
                  "recordset names unknown relation '" + rs.relation_name + "'");
      continue;
    }
    std::string class_iri = base + sanitize_ncname(cls->name);

    long row_number = 0;
    for (const auto& row : rs.rows) {
      ++row_number;
      if (row.cells.size() != rs.header.size()) {
        std::ostringstream msg;
        msg << "row has " << row.cells.size() << " cells, expected " << rs.header.size();
        diags.error(diag::RowArityError, Location::in_relation(rs.relation_name, row_number),
                    msg.str());
        continue;
      }
      std::vector<std::string> keys;
      if (!pk_cells(rs, row, cls->primary_key, row_number, keys)) continue;

      Individual ind;
      ind.iri = mint_iri(cls->name, keys, base);
      ind.class_iri = class_iri;

      for (const auto& attr : cls->attributes) {
        auto idx = cell_index(rs, attr.name);
        if (!idx || !row.cells[*idx]) continue;  // NULL: no assertion
        auto lit = coerce_literal(*row.cells[*idx], attr.type);
        if (!lit) {
          diags.error(diag::LiteralCoercionError,
                      Location::in_relation(rs.relation_name, row_number, attr.name),
                      "cannot read '" + *row.cells[*idx] + "' as " +
                          std::string(type_keyword(attr.type)));
          continue;
        }
        ind.literals.push_back({base + attribute_property_local(cdm, *cls, attr),
                                lit->lexical, lit->datatype});
      }

      for (const auto& cfk : cls->foreign_keys) {
        std::vector<std::string> fk_values;
        bool complete = true;
        for (const auto& col : cfk.fk.columns) {
          auto idx = cell_index(rs, col);
          if (!idx || !row.cells[*idx]) {
            complete = false;  // NULL FK: no assertion
            break;
          }
          fk_values.push_back(*row.cells[*idx]);
        }
        if (!complete) continue;
        std::string target = mint_iri(cfk.target_class, fk_values, base);
        ind.objects.push_back({base + sanitize_ncname(cfk.relationship_name), target});
        pending.push_back({target, rs.relation_name, row_number});
      }
      doc.individuals.push_back(std::move(ind));
    }
  }

  // Junction rows: one object assertion each, no individual.
  for (const auto& rs : data) {
    const CdmJunction* junction = cdm.find_junction(rs.relation_name);
    if (!junction) continue;
    long row_number = 0;
    for (const auto& row : rs.rows) {
      ++row_number;
      if (row.cells.size() != rs.header.size()) {
        std::ostringstream msg;
        msg << "row has " << row.cells.size() << " cells, expected " << rs.header.size();
        diags.error(diag::RowArityError, Location::in_relation(rs.relation_name, row_number),
                    msg.str());
        continue;
      }
      std::vector<std::string> src_values, dst_values;
      if (!pk_cells(rs, row, junction->source_fk.columns, row_number, src_values)) continue;
      if (!pk_cells(rs, row, junction->dest_fk.columns, row_number, dst_values)) continue;

      std::string subject = mint_iri(junction->source_class, src_values, base);
      std::string target = mint_iri(junction->dest_class, dst_values, base);
      std::string property = base + sanitize_ncname(junction->relationship_name);

      if (Individual* ind = const_cast<Individual*>(doc.find_individual(subject))) {
        ind->objects.push_back({property, target});
      } else {
        // No source-side row minted this individual; keep the assertion anyway.
        doc.orphan_assertions.push_back({subject, property, target});
        pending.push_back({subject, rs.relation_name, row_number});
      }
      pending.push_back({target, rs.relation_name, row_number});
    }
  }

  for (const auto& p : pending) {
    if (doc.find_individual(p.target_iri)) continue;
    std::string msg = "no row mints <" + p.target_iri + ">";
    if (opts.strict_ri)
      diags.error(diag::ReferentialIntegrityWarning,
                  Location::in_relation(p.relation, p.row), msg);
    else
      diags.warning(diag::ReferentialIntegrityWarning,
                    Location::in_relation(p.relation, p.row), msg);
  }
}

}  // namespace rdb2owl
