#include "rdb2owl/owl_builder.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace rdb2owl {

std::string map_type(SqlType t) {
  const char* local = "string";
  switch (t) {
    case SqlType::Int:
    case SqlType::SmallInt: local = "integer"; break;
    case SqlType::BigInt: local = "long"; break;
    case SqlType::Decimal: local = "decimal"; break;
    case SqlType::Float: local = "double"; break;
    case SqlType::Char:
    case SqlType::Varchar:
    case SqlType::Text: local = "string"; break;
    case SqlType::Date: local = "date"; break;
    case SqlType::Time: local = "time"; break;
    case SqlType::Timestamp: local = "dateTime"; break;
    case SqlType::Boolean: local = "boolean"; break;
  }
  return std::string(ns::xsd) + local;
}

std::string sanitize_ncname(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  auto escape = [&](unsigned char c) {
    char buf[5];
    std::snprintf(buf, sizeof(buf), "_x%02X", c);
    out += buf;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    bool keep = std::isalnum(c) || c == '-';
    if (i == 0 && (std::isdigit(c) || c == '-')) keep = false;  // NCName start
    if (keep)
      out += static_cast<char>(c);
    else
      escape(c);
  }
  if (out.empty()) out = "_x";
  return out;
}

std::string attribute_property_local(const CdmModel& model, const CdmClass& cls,
                                     const CdmAttribute& attr) {
  int occurrences = 0;
  for (const auto& c : model.classes)
    for (const auto& a : c.attributes)
      if (iequals(a.name, attr.name)) ++occurrences;
  // The parts are sanitized separately so the joining '_' survives; any
  // collision this could cause is caught by the IRI declaration check.
  if (occurrences > 1) return sanitize_ncname(cls.name) + "_" + sanitize_ncname(attr.name);
  return sanitize_ncname(attr.name);
}

OwlDocument build_ontology(const CdmModel& model, const std::string& base_iri,
                           Diagnostics& diags, const OntologyOptions& opts) {
  OwlDocument doc = make_document(base_iri);

  std::map<std::string, std::string> declared;  // IRI -> what declared it
  auto declare = [&](const std::string& iri, const std::string& what) {
    auto [it, inserted] = declared.emplace(iri, what);
    if (!inserted)
      diags.error(diag::IriCollision, Location{},
                  what + " and " + it->second + " map to the same IRI <" + iri + ">");
    return inserted;
  };
  auto entity_iri = [&](std::string_view local) { return base_iri + std::string(local); };

  int restriction_counter = 0;
  auto add_restriction = [&](const std::string& class_iri, const std::string& property_iri,
                             CardinalityKind kind, unsigned value) {
    CardinalityRestriction r;
    r.class_iri = class_iri;
    r.property_iri = property_iri;
    r.kind = kind;
    r.value = value;
    r.node_id = "r" + std::to_string(restriction_counter++);
    doc.axioms.push_back(std::move(r));
  };
  // min..max collapses to an exact-1 restriction when both ends are 1;
  // a trivial min of 0 and an unbounded max emit nothing.
  auto add_cardinality = [&](const std::string& class_iri, const std::string& property_iri,
                             const Cardinality& card) {
    if (card.min == 1 && card.max && *card.max == 1) {
      add_restriction(class_iri, property_iri, CardinalityKind::Exact, 1);
      return;
    }
    if (card.min > 0) add_restriction(class_iri, property_iri, CardinalityKind::Min, card.min);
    if (card.max) add_restriction(class_iri, property_iri, CardinalityKind::Max, *card.max);
  };

  // Step 1: classes.
  for (const auto& cls : model.classes) {
    std::string iri = entity_iri(sanitize_ncname(cls.name));
    declare(iri, "class " + cls.name);
    doc.axioms.push_back(ClassDecl{iri});
  }

  // Step 2: datatype properties with restrictions, defaults, lengths.
  for (const auto& cls : model.classes) {
    std::string class_iri = entity_iri(sanitize_ncname(cls.name));
    for (const auto& attr : cls.attributes) {
      std::string local = attribute_property_local(model, cls, attr);
      std::string iri = entity_iri(local);
      declare(iri, "property " + cls.name + "." + attr.name);
      doc.axioms.push_back(DatatypePropertyAxiom{iri, class_iri, map_type(attr.type), true});
      if (opts.attr_restrictions) {
        if (attr.nullable)
          add_restriction(class_iri, iri, CardinalityKind::Max, 1);
        else
          add_restriction(class_iri, iri, CardinalityKind::Exact, 1);
      }
      if (attr.default_value)
        doc.axioms.push_back(AnnotationAxiom{iri, base_iri + "defaultValue", *attr.default_value});
      if (opts.emit_length && attr.length)
        doc.axioms.push_back(
            AnnotationAxiom{iri, base_iri + "maxLength", std::to_string(*attr.length)});
    }
  }

  // Step 3: object properties, named inverses and relationship restrictions.
  for (const auto& rel : model.relationships) {
    std::string local = sanitize_ncname(rel.name);
    std::string iri = entity_iri(local);
    std::string inverse_iri = entity_iri(local + "Inv");
    std::string source_iri = entity_iri(sanitize_ncname(rel.source_class));
    std::string dest_iri = entity_iri(sanitize_ncname(rel.dest_class));
    declare(iri, "relationship " + rel.name);
    declare(inverse_iri, "inverse relationship " + rel.name + "Inv");
    doc.axioms.push_back(ObjectPropertyAxiom{iri, source_iri, dest_iri, std::nullopt});
    doc.axioms.push_back(ObjectPropertyAxiom{inverse_iri, dest_iri, source_iri, iri});
    add_cardinality(source_iri, iri, rel.cardinality.holder_side);
  }

  // Key axioms: OWL 2 only; OWL 1 has no key construct.
  bool has_unique_keys = false;
  for (const auto& cls : model.classes)
    if (!cls.unique_keys.empty()) has_unique_keys = true;
  if (opts.owl2_keys) {
    int key_counter = 0;
    auto add_has_key = [&](const CdmClass& cls, const std::vector<std::string>& columns) {
      HasKeyAxiom k;
      k.class_iri = entity_iri(sanitize_ncname(cls.name));
      for (const auto& col : columns) {
        const CdmAttribute* attr = cls.find_attribute(col);
        if (!attr) return;  // key over non-attribute columns: nothing to point at
        k.property_iris.push_back(entity_iri(attribute_property_local(model, cls, *attr)));
      }
      for (std::size_t i = 0; i < k.property_iris.size(); ++i)
        k.list_node_ids.push_back("k" + std::to_string(key_counter) + "_" + std::to_string(i));
      ++key_counter;
      doc.axioms.push_back(std::move(k));
    };
    for (const auto& cls : model.classes) {
      if (!cls.primary_key.empty()) add_has_key(cls, cls.primary_key);
      for (const auto& uk : cls.unique_keys) add_has_key(cls, uk);
    }
  } else if (has_unique_keys) {
    diags.note(diag::NoKeyAxioms, Location{},
               "unique keys are not expressible in the owl1 profile; "
               "use --profile owl2 to emit owl:hasKey axioms");
  }

  return doc;
}

}  // namespace rdb2owl
