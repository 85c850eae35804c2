#include "rdb2owl/cdm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace rdb2owl {

const CdmAttribute* CdmClass::find_attribute(std::string_view name) const {
  for (const auto& a : attributes)
    if (iequals(a.name, name)) return &a;
  return nullptr;
}

const CdmClass* CdmModel::find_class(std::string_view name) const {
  for (const auto& c : classes)
    if (iequals(c.name, name)) return &c;
  return nullptr;
}

const CdmJunction* CdmModel::find_junction(std::string_view relation) const {
  for (const auto& j : junctions)
    if (iequals(j.relation, relation)) return &j;
  return nullptr;
}

RelationKind classify_relation(const Relation& r, const Mtrdb& m) {
  (void)m;
  if (r.primary_key.size() < 2) return RelationKind::Base;
  if (r.foreign_keys.size() != 2) return RelationKind::Base;

  auto in_some_fk = [&](std::string_view col) {
    for (const auto& fk : r.foreign_keys)
      for (const auto& c : fk.columns)
        if (iequals(c, col)) return true;
    return false;
  };
  for (const auto& pk_col : r.primary_key)
    if (!in_some_fk(pk_col)) return RelationKind::Base;

  auto in_pk = [&](std::string_view col) {
    for (const auto& c : r.primary_key)
      if (iequals(c, col)) return true;
    return false;
  };
  for (const auto& f : r.fields)
    if (!in_pk(f.name)) return RelationKind::Base;  // association class: keep

  return RelationKind::Junction;
}

namespace {

std::string upper_camel(std::string_view s) {
  std::string out;
  bool start = true;
  for (char c : s) {
    if (c == '_') {
      start = true;
      continue;
    }
    out += start ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
    start = false;
  }
  return out;
}

std::string lower_camel(std::string_view s) {
  std::string out = upper_camel(s);
  if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

std::string strip_id_suffix(std::string_view name) {
  std::string out(name);
  if (out.size() >= 2 && iequals(std::string_view(out).substr(out.size() - 2), "id"))
    out.resize(out.size() - 2);
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

}  // namespace

std::string name_fk_relationship(const ForeignKey& fk, const Mtrdb& m) {
  (void)m;
  std::string stem = fk.columns.empty() ? std::string() : strip_id_suffix(fk.columns.front());
  if (stem.empty()) stem = fk.referenced_relation;
  return "has" + upper_camel(stem);
}

std::string name_junction_relationship(const Relation& junction) {
  return lower_camel(junction.name);
}

CdmModel build_cdm(const Mtrdb& m, Diagnostics& diags) {
  CdmModel model;

  // Classification pass, with demotion of junctions that other relations
  // still reference by FK.
  std::vector<RelationKind> kind(m.relations.size(), RelationKind::Base);
  for (std::size_t i = 0; i < m.relations.size(); ++i)
    kind[i] = classify_relation(m.relations[i], m);
  for (std::size_t i = 0; i < m.relations.size(); ++i) {
    if (kind[i] != RelationKind::Junction) continue;
    for (const auto& other : m.relations) {
      if (iequals(other.name, m.relations[i].name)) continue;
      for (const auto& fk : other.foreign_keys) {
        if (iequals(fk.referenced_relation, m.relations[i].name)) {
          kind[i] = RelationKind::Base;
          diags.warning(diag::ClassifyConflict, Location::in_relation(m.relations[i].name),
                        "junction relation '" + m.relations[i].name + "' is referenced by '" +
                            other.name + "'; keeping it as a class");
        }
      }
      if (kind[i] == RelationKind::Base) break;
    }
  }

  // Classes for base relations, source order preserved.
  for (std::size_t i = 0; i < m.relations.size(); ++i) {
    const Relation& r = m.relations[i];
    if (kind[i] == RelationKind::Junction) {
      model.junction_relations.push_back(r.name);
      continue;
    }
    CdmClass cls;
    cls.name = r.name;
    cls.primary_key = r.primary_key;
    cls.unique_keys = r.unique_keys;
    auto in_pk = [&](std::string_view col) {
      return std::any_of(r.primary_key.begin(), r.primary_key.end(),
                         [&](const std::string& c) { return iequals(c, col); });
    };
    auto in_fk = [&](std::string_view col) {
      for (const auto& fk : r.foreign_keys)
        for (const auto& c : fk.columns)
          if (iequals(c, col)) return true;
      return false;
    };
    for (const auto& f : r.fields) {
      // FK-only columns become relationships; PK columns stay attributes.
      if (in_fk(f.name) && !in_pk(f.name)) continue;
      CdmAttribute a;
      a.name = f.name;
      a.type = f.type;
      a.length = f.length;
      a.scale = f.scale;
      a.default_value = f.default_value;
      a.nullable = f.nullable;
      a.is_primary_key = in_pk(f.name);
      cls.attributes.push_back(std::move(a));
    }
    model.classes.push_back(std::move(cls));
  }

  // Relationships: base-relation FKs in declaration order, then junctions.
  struct Pending {
    CdmRelationship rel;
    std::string base_name;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < m.relations.size(); ++i) {
    if (kind[i] == RelationKind::Junction) continue;
    const Relation& r = m.relations[i];
    for (std::size_t k = 0; k < r.foreign_keys.size(); ++k) {
      const ForeignKey& fk = r.foreign_keys[k];
      CdmRelationship rel;
      rel.cardinality = derive_cardinality(fk, r);
      rel.source_class = r.name;
      const Relation* target = m.find_relation(fk.referenced_relation);
      rel.dest_class = target ? target->name : fk.referenced_relation;
      rel.origin = RelationshipOrigin::ForeignKey;
      rel.origin_relation = r.name;
      rel.origin_fk_index = static_cast<int>(k);
      pending.push_back({std::move(rel), name_fk_relationship(fk, m)});
    }
  }
  for (std::size_t i = 0; i < m.relations.size(); ++i) {
    if (kind[i] != RelationKind::Junction) continue;
    const Relation& r = m.relations[i];
    CdmRelationship rel;
    rel.cardinality.holder_side = {0, std::nullopt};
    rel.cardinality.referenced_side = {0, std::nullopt};
    const Relation* src = m.find_relation(r.foreign_keys[0].referenced_relation);
    const Relation* dst = m.find_relation(r.foreign_keys[1].referenced_relation);
    rel.source_class = src ? src->name : r.foreign_keys[0].referenced_relation;
    rel.dest_class = dst ? dst->name : r.foreign_keys[1].referenced_relation;
    rel.origin = RelationshipOrigin::Junction;
    rel.origin_relation = r.name;
    pending.push_back({std::move(rel), name_junction_relationship(r)});
  }

  // Name deduplication: bare name, then + holder class, then numeric suffix.
  std::set<std::string> taken;
  for (auto& p : pending) {
    std::string name = p.base_name;
    if (taken.count(name)) name = p.base_name + p.rel.source_class;
    for (int suffix = 2; taken.count(name); ++suffix)
      name = p.base_name + p.rel.source_class + std::to_string(suffix);
    taken.insert(name);
    p.rel.name = std::move(name);
    model.relationships.push_back(p.rel);
  }

  // Back-references on classes and junction descriptors.
  for (std::size_t ri = 0; ri < model.relationships.size(); ++ri) {
    const CdmRelationship& rel = model.relationships[ri];
    for (auto& cls : model.classes)
      if (iequals(cls.name, rel.source_class)) cls.relationship_indices.push_back(ri);
    if (rel.origin == RelationshipOrigin::ForeignKey) {
      for (auto& cls : model.classes) {
        if (!iequals(cls.name, rel.origin_relation)) continue;
        const Relation* r = m.find_relation(rel.origin_relation);
        const ForeignKey& fk = r->foreign_keys[static_cast<std::size_t>(rel.origin_fk_index)];
        cls.foreign_keys.push_back({fk, rel.name, rel.dest_class});
      }
    } else {
      const Relation* r = m.find_relation(rel.origin_relation);
      CdmJunction j;
      j.relation = r->name;
      j.relationship_name = rel.name;
      j.source_fk = r->foreign_keys[0];
      j.dest_fk = r->foreign_keys[1];
      j.source_class = rel.source_class;
      j.dest_class = rel.dest_class;
      model.junctions.push_back(std::move(j));
    }
  }
  return model;
}

std::string dump_cdm(const CdmModel& model) {
  std::ostringstream out;
  for (const auto& cls : model.classes) {
    out << "class " << cls.name << "\n";
    for (const auto& a : cls.attributes) {
      out << "  attribute " << a.name << " " << type_keyword(a.type);
      if (a.length) {
        out << "(" << *a.length;
        if (a.scale) out << "," << *a.scale;
        out << ")";
      }
      if (a.is_primary_key) out << " pk";
      if (!a.nullable) out << " not-null";
      if (a.default_value) out << " default " << *a.default_value;
      out << "\n";
    }
    for (std::size_t ri : cls.relationship_indices) {
      const CdmRelationship& rel = model.relationships[ri];
      out << "  relationship " << rel.name << " -> " << rel.dest_class << " ["
          << rel.cardinality.holder_side.to_string() << " / "
          << rel.cardinality.referenced_side.to_string() << "]\n";
    }
  }
  for (const auto& name : model.junction_relations) out << "junction " << name << "\n";
  return out.str();
}

}  // namespace rdb2owl
