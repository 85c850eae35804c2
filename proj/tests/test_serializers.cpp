#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "rdb2owl/owl_builder.hpp"
#include "rdb2owl/owl_writer.hpp"
#include "rdf_readback.hpp"

using namespace rdb2owl;
using namespace rdb2owl::testing;

TEST_CASE("class declarations use the expected surface forms") {
  Diagnostics diags;
  CdmModel cdm = fixture_cdm("fig3.sql", diags);
  OwlDocument doc = build_ontology(cdm, kBase, diags);
  REQUIRE_FALSE(diags.has_errors());

  std::string xml = serialize_rdfxml(doc, diags);
  REQUIRE_FALSE(diags.has_errors());
  CHECK(xml.find("<owl:Class rdf:ID=\"Product\"/>") != std::string::npos);
  CHECK(xml.find("xml:base=\"http://example.org/store\"") != std::string::npos);
  CHECK(xml.find("<rdf:RDF") != std::string::npos);

  std::string ttl = serialize_turtle(doc, diags);
  REQUIRE_FALSE(diags.has_errors());
  CHECK(ttl.find(":Product a owl:Class .") != std::string::npos);
  CHECK(ttl.find("@prefix owl: <http://www.w3.org/2002/07/owl#> .") != std::string::npos);
}

TEST_CASE("both serializations carry the same triples") {
  SamplePipeline p = run_sample(true);
  Diagnostics diags;
  std::string xml = serialize_rdfxml(p.doc, diags);
  std::string ttl = serialize_turtle(p.doc, diags);
  REQUIRE_FALSE(diags.has_errors());

  auto from_xml = parse_rdfxml(xml);
  auto from_ttl = parse_turtle(ttl);
  CHECK(from_xml.size() == from_ttl.size());
  CHECK_MESSAGE(same_triples(from_xml, from_ttl), diff_triples(from_xml, from_ttl));

  // And both match the document's own triple expansion.
  auto expanded = expand_triples(p.doc);
  CHECK_MESSAGE(same_triples(from_ttl, expanded), diff_triples(from_ttl, expanded));
}

TEST_CASE("cross-format equivalence holds for every corpus schema") {
  for (const auto& name : corpus_schemas()) {
    CAPTURE(name);
    Diagnostics diags;
    CdmModel cdm = fixture_cdm(name, diags);
    OntologyOptions opts;
    opts.owl2_keys = true;  // exercise the RDF list serialization too
    opts.emit_length = true;
    OwlDocument doc = build_ontology(cdm, kBase, diags, opts);
    REQUIRE_FALSE(diags.has_errors());

    Diagnostics d2;
    std::string xml = serialize_rdfxml(doc, d2);
    std::string ttl = serialize_turtle(doc, d2);
    REQUIRE_FALSE(d2.has_errors());
    auto from_xml = parse_rdfxml(xml);
    auto from_ttl = parse_turtle(ttl);
    CHECK_MESSAGE(same_triples(from_xml, from_ttl), name << "\n"
                                                         << diff_triples(from_xml, from_ttl));
  }
}

TEST_CASE("serialization is deterministic") {
  SamplePipeline a = run_sample(true);
  SamplePipeline b = run_sample(true);
  Diagnostics diags;
  CHECK(serialize_rdfxml(a.doc, diags) == serialize_rdfxml(b.doc, diags));
  CHECK(serialize_turtle(a.doc, diags) == serialize_turtle(b.doc, diags));
  REQUIRE_FALSE(diags.has_errors());
}

TEST_CASE("emitted documents are referentially closed") {
  SamplePipeline p = run_sample(true);
  Diagnostics diags;
  std::string xml = serialize_rdfxml(p.doc, diags);
  REQUIRE_FALSE(diags.has_errors());
  auto triples = parse_rdfxml(xml);

  // Every IRI under the base that is used as an object is also a subject or a
  // declared entity somewhere in the document.
  std::set<std::string> subjects;
  for (const auto& t : triples)
    if (t.subject.kind == TripleNode::Kind::Iri) subjects.insert(t.subject.value);
  for (const auto& t : triples) {
    if (t.object.kind != TripleNode::Kind::Iri) continue;
    if (t.object.value.rfind(kBase, 0) != 0) continue;
    CAPTURE(to_string(t));
    CHECK(subjects.count(t.object.value) == 1);
  }
}

TEST_CASE("non-NCName locals are rejected defensively") {
  CHECK(is_ncname("Product"));
  CHECK(is_ncname("a-b_c"));
  CHECK_FALSE(is_ncname("7up"));
  CHECK_FALSE(is_ncname("a b"));
  CHECK_FALSE(is_ncname(""));

  // A hand-damaged document (bypassing the builder's sanitizer) is refused.
  OwlDocument doc = make_document(kBase);
  doc.axioms.push_back(ClassDecl{std::string(kBase) + "not valid"});
  Diagnostics diags;
  serialize_rdfxml(doc, diags);
  CHECK(diags.has_errors());
  CHECK(diags.has_code(diag::InvalidNCName));
}
