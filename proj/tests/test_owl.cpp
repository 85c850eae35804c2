#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "rdb2owl/owl_builder.hpp"

using namespace rdb2owl;
using rdb2owl::testing::fixture_cdm;
using rdb2owl::testing::kBase;

namespace {

template <typename T>
std::vector<const T*> axioms_of(const OwlDocument& doc) {
  std::vector<const T*> out;
  for (const auto& ax : doc.axioms)
    if (const T* t = std::get_if<T>(&ax)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("type map") {
  CHECK(map_type(SqlType::Int) == std::string(ns::xsd) + "integer");
  CHECK(map_type(SqlType::SmallInt) == std::string(ns::xsd) + "integer");
  CHECK(map_type(SqlType::BigInt) == std::string(ns::xsd) + "long");
  CHECK(map_type(SqlType::Decimal) == std::string(ns::xsd) + "decimal");
  CHECK(map_type(SqlType::Float) == std::string(ns::xsd) + "double");
  CHECK(map_type(SqlType::Char) == std::string(ns::xsd) + "string");
  CHECK(map_type(SqlType::Varchar) == std::string(ns::xsd) + "string");
  CHECK(map_type(SqlType::Text) == std::string(ns::xsd) + "string");
  CHECK(map_type(SqlType::Date) == std::string(ns::xsd) + "date");
  CHECK(map_type(SqlType::Time) == std::string(ns::xsd) + "time");
  CHECK(map_type(SqlType::Timestamp) == std::string(ns::xsd) + "dateTime");
  CHECK(map_type(SqlType::Boolean) == std::string(ns::xsd) + "boolean");
}

TEST_CASE("sanitize_ncname keeps safe characters and escapes the rest") {
  CHECK(sanitize_ncname("Product") == "Product");
  CHECK(sanitize_ncname("a b") == "a_x20b");
  CHECK(sanitize_ncname("A-ok") == "A-ok");
  CHECK(sanitize_ncname("under_score") == "under_x5Fscore");
  // Leading digit or '-' must not start an NCName.
  CHECK(sanitize_ncname("7up")[0] == '_');
  CHECK(sanitize_ncname("-x")[0] == '_');
}

TEST_CASE("sample ontology axiom counts") {
  Diagnostics diags;
  CdmModel cdm = fixture_cdm("fig3.sql", diags);
  OwlDocument doc = build_ontology(cdm, kBase, diags);
  REQUIRE_FALSE(diags.has_errors());

  CHECK(doc.base_iri == kBase);
  CHECK(axioms_of<ClassDecl>(doc).size() == 5);
  CHECK(axioms_of<DatatypePropertyAxiom>(doc).size() == 13);

  auto objects = axioms_of<ObjectPropertyAxiom>(doc);
  CHECK(objects.size() == 8);  // 4 relationships, each with a named inverse
  std::size_t named = 0, inverses = 0;
  for (const auto* o : objects)
    (o->inverse_of ? inverses : named) += 1;
  CHECK(named == 4);
  CHECK(inverses == 4);
  bool found_inverse = false;
  for (const auto* o : objects)
    if (o->iri == std::string(kBase) + "hasCustomerInv") {
      found_inverse = true;
      CHECK(o->inverse_of == std::string(kBase) + "hasCustomer");
      CHECK(o->domain == std::string(kBase) + "Customer");
      CHECK(o->range == std::string(kBase) + "Order");
    }
  CHECK(found_inverse);

  // 13 NOT NULL attributes (exact 1) plus 3 mandatory FK holder sides; the
  // many-to-many relationship is unconstrained.
  auto restrictions = axioms_of<CardinalityRestriction>(doc);
  CHECK(restrictions.size() == 16);
  std::size_t exact = 0, maxes = 0, mins = 0;
  for (const auto* r : restrictions) {
    if (r->kind == CardinalityKind::Exact) ++exact;
    if (r->kind == CardinalityKind::Max) ++maxes;
    if (r->kind == CardinalityKind::Min) ++mins;
  }
  CHECK(exact == 16);
  CHECK(maxes == 0);
  CHECK(mins == 0);

  // Deterministic blank-node labels, no duplicates.
  std::set<std::string> node_ids;
  for (const auto* r : restrictions) node_ids.insert(r->node_id);
  CHECK(node_ids.size() == restrictions.size());

  // owl1 default: no key axioms.
  CHECK(axioms_of<HasKeyAxiom>(doc).empty());
}

TEST_CASE("datatype property names are disambiguated only on collision") {
  Diagnostics diags;
  CdmModel cdm = fixture_cdm("dup_names.sql", diags);
  const CdmClass* customer = cdm.find_class("Customer");
  const CdmClass* store = cdm.find_class("Store");
  REQUIRE(customer != nullptr);
  REQUIRE(store != nullptr);

  CHECK(attribute_property_local(cdm, *customer, *customer->find_attribute("Name")) ==
        "Customer_Name");
  CHECK(attribute_property_local(cdm, *store, *store->find_attribute("Name")) == "Store_Name");
  CHECK(attribute_property_local(cdm, *customer, *customer->find_attribute("CustomerID")) ==
        "CustomerID");

  OwlDocument doc = build_ontology(cdm, kBase, diags);
  REQUIRE_FALSE(diags.has_errors());
  std::set<std::string> iris;
  for (const auto& ax : doc.axioms)
    if (const auto* dp = std::get_if<DatatypePropertyAxiom>(&ax)) iris.insert(dp->iri);
  CHECK(iris.count(std::string(kBase) + "Customer_Name") == 1);
  CHECK(iris.count(std::string(kBase) + "Store_Name") == 1);
  CHECK(iris.count(std::string(kBase) + "Name") == 0);
}

TEST_CASE("attribute restrictions follow nullability and can be disabled") {
  Diagnostics diags;
  CdmModel cdm = fixture_cdm("nullable_fk.sql", diags);
  OwlDocument doc = build_ontology(cdm, kBase, diags);
  REQUIRE_FALSE(diags.has_errors());

  // PlayerName NOT NULL -> exact 1; TeamID is FK-only (no attribute).
  bool exact_on_name = false, max_on_something = false;
  for (const auto& ax : doc.axioms) {
    const auto* r = std::get_if<CardinalityRestriction>(&ax);
    if (!r) continue;
    if (r->property_iri == std::string(kBase) + "PlayerName")
      exact_on_name = r->kind == CardinalityKind::Exact && r->value == 1;
    if (r->kind == CardinalityKind::Max) max_on_something = true;
  }
  CHECK(exact_on_name);
  // The nullable FK contributes a max-1 object restriction on the holder side.
  CHECK(max_on_something);

  OntologyOptions off;
  off.attr_restrictions = false;
  Diagnostics d2;
  OwlDocument bare = build_ontology(cdm, kBase, d2, off);
  for (const auto& ax : bare.axioms) {
    const auto* r = std::get_if<CardinalityRestriction>(&ax);
    if (!r) continue;
    // Only object-property restrictions remain.
    bool is_attr = false;
    for (const auto& ax2 : bare.axioms)
      if (const auto* dp = std::get_if<DatatypePropertyAxiom>(&ax2))
        is_attr |= dp->iri == r->property_iri;
    CHECK_FALSE(is_attr);
  }
}

TEST_CASE("defaults and lengths become annotations") {
  Diagnostics diags;
  CdmModel cdm = fixture_cdm("defaults.sql", diags);

  OwlDocument doc = build_ontology(cdm, kBase, diags);
  REQUIRE_FALSE(diags.has_errors());
  std::size_t default_notes = 0;
  for (const auto& ax : doc.axioms)
    if (const auto* a = std::get_if<AnnotationAxiom>(&ax))
      if (a->property == std::string(kBase) + "defaultValue") ++default_notes;
  CHECK(default_notes == 3);

  OntologyOptions with_len;
  with_len.emit_length = true;
  Diagnostics d2;
  OwlDocument doc2 = build_ontology(cdm, kBase, d2, with_len);
  std::size_t lengths = 0;
  for (const auto& ax : doc2.axioms)
    if (const auto* a = std::get_if<AnnotationAxiom>(&ax))
      if (a->property == std::string(kBase) + "maxLength") ++lengths;
  CHECK(lengths == 2);  // Balance DECIMAL(12,2) and Currency CHAR(3)
}

TEST_CASE("owl2 profile emits key axioms; owl1 notes their absence") {
  Diagnostics diags;
  CdmModel cdm = fixture_cdm("uniques.sql", diags);

  OntologyOptions owl2;
  owl2.owl2_keys = true;
  Diagnostics d2;
  OwlDocument doc = build_ontology(cdm, kBase, d2, owl2);
  REQUIRE_FALSE(d2.has_errors());
  auto keys = axioms_of<HasKeyAxiom>(doc);
  // Member: PK + 2 unique keys; Badge: PK only (its unique column is FK-only
  // and has no datatype property to point at).
  CHECK(keys.size() == 4);
  for (const auto* k : keys) {
    CHECK(k->property_iris.size() == k->list_node_ids.size());
    CHECK_FALSE(k->property_iris.empty());
  }

  Diagnostics d3;
  OwlDocument doc1 = build_ontology(cdm, kBase, d3);
  CHECK(axioms_of<HasKeyAxiom>(doc1).empty());
  CHECK(d3.has_code(diag::NoKeyAxioms));
}

TEST_CASE("empty model yields an empty but valid document") {
  CdmModel empty;
  Diagnostics diags;
  OwlDocument doc = build_ontology(empty, kBase, diags);
  CHECK_FALSE(diags.has_errors());
  CHECK(doc.axioms.empty());
  CHECK(doc.individuals.empty());
  CHECK_FALSE(doc.prefixes.empty());
}
