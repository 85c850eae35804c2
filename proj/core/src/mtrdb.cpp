#include "rdb2owl/mtrdb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rdb2owl {

const Field* Relation::find_field(std::string_view name) const {
  for (const auto& f : fields)
    if (iequals(f.name, name)) return &f;
  return nullptr;
}

const Relation* Mtrdb::find_relation(std::string_view name) const {
  for (const auto& r : relations)
    if (iequals(r.name, name)) return &r;
  return nullptr;
}

std::string Cardinality::to_string() const {
  std::ostringstream out;
  out << min << "..";
  if (max)
    out << *max;
  else
    out << "*";
  return out.str();
}

namespace {

bool same_columns(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  auto lower_sorted = [](const std::vector<std::string>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(to_lower(s));
    std::sort(out.begin(), out.end());
    return out;
  };
  return lower_sorted(a) == lower_sorted(b);
}

}  // namespace

CardinalityPair derive_cardinality(const ForeignKey& fk, const Relation& holder) {
  CardinalityPair card;
  bool any_nullable = false;
  for (const auto& col : fk.columns) {
    const Field* f = holder.find_field(col);
    if (f && f->nullable) any_nullable = true;
  }
  card.holder_side.min = any_nullable ? 0 : 1;
  card.holder_side.max = 1;

  bool unique = same_columns(fk.columns, holder.primary_key);
  for (const auto& uk : holder.unique_keys)
    if (same_columns(fk.columns, uk)) unique = true;
  card.referenced_side.min = 0;
  if (unique)
    card.referenced_side.max = 1;
  else
    card.referenced_side.max = std::nullopt;
  return card;
}

Mtrdb extract_mtrdb(const SchemaAst& schema, Diagnostics& diags, const ExtractOptions& opts) {
  Mtrdb m;

  for (const auto& table : schema.tables) {
    Relation rel;
    rel.name = table.name;
    for (const auto& c : table.columns)
      rel.fields.push_back({c.name, c.type, c.length, c.scale, c.nullable, c.default_value});
    rel.primary_key = table.primary_key;
    rel.unique_keys = table.uniques;
    if (rel.primary_key.empty()) {
      if (opts.strict_keys) {
        diags.error(diag::MissingPrimaryKey, Location::in_relation(rel.name),
                    "relation '" + rel.name + "' declares no primary key");
      } else if (!rel.fields.empty()) {
        // Surrogate composite key: the full column list.
        for (const auto& f : rel.fields) rel.primary_key.push_back(f.name);
        diags.warning(diag::KeylessTableFallback, Location::in_relation(rel.name),
                      "relation '" + rel.name +
                          "' has no primary key; using all columns as a surrogate key");
      }
    }
    m.relations.push_back(std::move(rel));
  }

  // Resolve foreign keys now that all relations exist.
  for (std::size_t i = 0; i < schema.tables.size(); ++i) {
    const TableDef& table = schema.tables[i];
    Relation& holder = m.relations[i];
    for (const auto& fk_clause : table.foreign_keys) {
      const Relation* target = m.find_relation(fk_clause.referenced_table);
      if (!target) {
        diags.error(diag::UnresolvedReference, Location::in_relation(holder.name),
                    "foreign key in '" + holder.name + "' references unknown relation '" +
                        fk_clause.referenced_table + "'");
        continue;
      }
      if (!fk_clause.referenced_columns.empty() &&
          !same_columns(fk_clause.referenced_columns, target->primary_key)) {
        diags.error(diag::KeyMismatch, Location::in_relation(holder.name),
                    "foreign key in '" + holder.name + "' must reference the primary key of '" +
                        target->name + "'");
        continue;
      }
      if (fk_clause.columns.size() != target->primary_key.size()) {
        std::ostringstream msg;
        msg << "foreign key in '" << holder.name << "' has " << fk_clause.columns.size()
            << " columns but the primary key of '" << target->name << "' has "
            << target->primary_key.size();
        diags.error(diag::KeyMismatch, Location::in_relation(holder.name), msg.str());
        continue;
      }
      bool types_ok = true;
      for (std::size_t k = 0; k < fk_clause.columns.size(); ++k) {
        const Field* local = holder.find_field(fk_clause.columns[k]);
        const Field* remote = target->find_field(target->primary_key[k]);
        if (local && remote && local->type != remote->type) {
          diags.error(diag::KeyMismatch,
                      Location::in_relation(holder.name, std::nullopt, local->name),
                      "foreign key column '" + local->name + "' has type " +
                          std::string(type_keyword(local->type)) + " but '" + target->name + "." +
                          remote->name + "' has type " + std::string(type_keyword(remote->type)));
          types_ok = false;
        }
      }
      if (!types_ok) continue;

      ForeignKey fk;
      fk.columns = fk_clause.columns;
      fk.referenced_relation = target->name;
      fk.referenced_pk = target->primary_key;
      holder.foreign_keys.push_back(fk);
    }
  }

  // Relationship set: one entry per resolved foreign key.
  for (const auto& holder : m.relations) {
    for (const auto& fk : holder.foreign_keys) {
      const Relation* target = m.find_relation(fk.referenced_relation);
      Relationship rel;
      rel.source_pk = fk.referenced_pk;
      rel.source = target->name;
      rel.fk_columns = fk.columns;
      rel.target = holder.name;
      rel.cardinality = derive_cardinality(fk, holder);
      rel.self_referential = iequals(holder.name, target->name);
      m.relationships.push_back(std::move(rel));
    }
  }
  return m;
}

std::vector<Diagnostic> validate_mtrdb(const Mtrdb& m) {
  Diagnostics diags;

  std::set<std::string> names;
  for (const auto& r : m.relations) {
    if (!names.insert(to_lower(r.name)).second)
      diags.error(diag::DuplicateRelation, Location::in_relation(r.name),
                  "relation '" + r.name + "' appears more than once");
    if (r.primary_key.empty())
      diags.error(diag::MissingPrimaryKey, Location::in_relation(r.name),
                  "relation '" + r.name + "' has an empty primary key");
    for (const auto& f : r.fields)
      if (f.length && *f.length <= 0)
        diags.error(diag::KeyMismatch, Location::in_relation(r.name, std::nullopt, f.name),
                    "field '" + f.name + "' has a non-positive length");
    for (const auto& fk : r.foreign_keys) {
      const Relation* target = m.find_relation(fk.referenced_relation);
      if (!target) {
        diags.error(diag::UnresolvedReference, Location::in_relation(r.name),
                    "foreign key references unknown relation '" + fk.referenced_relation + "'");
        continue;
      }
      if (fk.referenced_pk != target->primary_key)
        diags.error(diag::KeyMismatch, Location::in_relation(r.name),
                    "foreign key referenced_pk differs from the primary key of '" +
                        target->name + "'");
    }
  }

  std::size_t fk_count = 0;
  for (const auto& r : m.relations) fk_count += r.foreign_keys.size();
  if (m.relationships.size() != fk_count) {
    std::ostringstream msg;
    msg << "relationship count " << m.relationships.size()
        << " does not match foreign key count " << fk_count;
    diags.error(diag::KeyMismatch, Location{}, msg.str());
  }

  for (const auto& rel : m.relationships) {
    const Relation* source = m.find_relation(rel.source);
    const Relation* target = m.find_relation(rel.target);
    if (!source || !target) {
      diags.error(diag::UnresolvedReference, Location::in_relation(rel.target),
                  "relationship endpoints '" + rel.source + "' -> '" + rel.target +
                      "' do not both resolve");
      continue;
    }
    if (rel.source_pk.size() != rel.fk_columns.size()) {
      diags.error(diag::KeyMismatch, Location::in_relation(rel.target),
                  "relationship between '" + rel.source + "' and '" + rel.target +
                      "' has mismatched key arity");
      continue;
    }
    for (std::size_t i = 0; i < rel.fk_columns.size(); ++i) {
      const Field* local = target->find_field(rel.fk_columns[i]);
      const Field* remote = source->find_field(rel.source_pk[i]);
      if (!local || !remote) {
        diags.error(diag::UnresolvedReference,
                    Location::in_relation(rel.target, std::nullopt, rel.fk_columns[i]),
                    "relationship key column does not exist");
      } else if (local->type != remote->type) {
        diags.error(diag::KeyMismatch,
                    Location::in_relation(rel.target, std::nullopt, local->name),
                    "relationship key columns have incompatible types");
      }
    }
  }
  return diags.items();
}

std::string dump_mtrdb(const Mtrdb& m) {
  std::ostringstream out;
  for (const auto& r : m.relations) {
    out << "relation " << r.name << "\n";
    for (const auto& f : r.fields) {
      out << "  field " << f.name << " " << type_keyword(f.type);
      if (f.length) {
        out << "(" << *f.length;
        if (f.scale) out << "," << *f.scale;
        out << ")";
      }
      out << (f.nullable ? " null" : " not-null");
      if (f.default_value) out << " default " << *f.default_value;
      out << "\n";
    }
    out << "  primary key (";
    for (std::size_t i = 0; i < r.primary_key.size(); ++i)
      out << (i ? ", " : "") << r.primary_key[i];
    out << ")\n";
    for (const auto& uk : r.unique_keys) {
      out << "  unique (";
      for (std::size_t i = 0; i < uk.size(); ++i) out << (i ? ", " : "") << uk[i];
      out << ")\n";
    }
    for (const auto& fk : r.foreign_keys) {
      out << "  foreign key (";
      for (std::size_t i = 0; i < fk.columns.size(); ++i) out << (i ? ", " : "") << fk.columns[i];
      out << ") -> " << fk.referenced_relation << "\n";
    }
  }
  for (const auto& rel : m.relationships) {
    out << "relationship " << rel.target << " -> " << rel.source << " via (";
    for (std::size_t i = 0; i < rel.fk_columns.size(); ++i)
      out << (i ? ", " : "") << rel.fk_columns[i];
    out << ") [" << rel.cardinality.holder_side.to_string() << " / "
        << rel.cardinality.referenced_side.to_string() << "]";
    if (rel.self_referential) out << " self";
    out << "\n";
  }
  return out.str();
}

}  // namespace rdb2owl
