#ifndef RDB2OWL_OWL_MODEL_HPP
#define RDB2OWL_OWL_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdb2owl {

namespace ns {
inline constexpr const char* rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* owl = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

struct ClassDecl {
  std::string iri;
  friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct DatatypePropertyAxiom {
  std::string iri;
  std::string domain;
  std::string range;  // xsd datatype IRI
  bool functional = true;
  friend bool operator==(const DatatypePropertyAxiom&, const DatatypePropertyAxiom&) = default;
};

struct ObjectPropertyAxiom {
  std::string iri;
  std::string domain;
  std::string range;
  std::optional<std::string> inverse_of;
  friend bool operator==(const ObjectPropertyAxiom&, const ObjectPropertyAxiom&) = default;
};

enum class CardinalityKind { Exact, Min, Max };

// Anonymous restriction attached to class_iri via rdfs:subClassOf. node_id is
// the deterministic blank-node label shared by both serializations.
struct CardinalityRestriction {
  std::string class_iri;
  std::string property_iri;
  CardinalityKind kind = CardinalityKind::Exact;
  unsigned value = 0;
  std::string node_id;
  friend bool operator==(const CardinalityRestriction&, const CardinalityRestriction&) = default;
};

// owl:hasKey with an RDF list of property IRIs; one blank node label per
// list link, assigned at build time.
struct HasKeyAxiom {
  std::string class_iri;
  std::vector<std::string> property_iris;
  std::vector<std::string> list_node_ids;
  friend bool operator==(const HasKeyAxiom&, const HasKeyAxiom&) = default;
};

struct AnnotationAxiom {
  std::string subject;
  std::string property;
  std::string value;  // plain string literal
  friend bool operator==(const AnnotationAxiom&, const AnnotationAxiom&) = default;
};

using OwlAxiom = std::variant<ClassDecl, DatatypePropertyAxiom, ObjectPropertyAxiom,
                              CardinalityRestriction, HasKeyAxiom, AnnotationAxiom>;

struct LiteralAssertion {
  std::string property;
  std::string lexical;
  std::string datatype;  // xsd datatype IRI
  friend bool operator==(const LiteralAssertion&, const LiteralAssertion&) = default;
};

struct ObjectAssertion {
  std::string property;
  std::string target;
  friend bool operator==(const ObjectAssertion&, const ObjectAssertion&) = default;
};

struct Individual {
  std::string iri;
  std::string class_iri;
  std::vector<LiteralAssertion> literals;
  std::vector<ObjectAssertion> objects;
  friend bool operator==(const Individual&, const Individual&) = default;
};

// An object assertion whose subject individual does not exist in this
// document (dangling junction rows); serialized as a bare description.
struct OrphanAssertion {
  std::string subject;
  std::string property;
  std::string target;
  friend bool operator==(const OrphanAssertion&, const OrphanAssertion&) = default;
};

struct OwlDocument {
  std::string base_iri;  // absolute, ends in '#' or '/'
  std::vector<std::pair<std::string, std::string>> prefixes;  // prefix -> IRI
  std::vector<OwlAxiom> axioms;
  std::vector<Individual> individuals;
  std::vector<OrphanAssertion> orphan_assertions;

  bool declares_class(std::string_view iri) const;
  const Individual* find_individual(std::string_view iri) const;
};

OwlDocument make_document(std::string base_iri);

// RDF triple model used for the Turtle serializer and the structural checks.
struct TripleNode {
  enum class Kind { Iri, Blank, Literal };
  Kind kind = Kind::Iri;
  std::string value;     // IRI, blank label, or lexical form
  std::string datatype;  // literals only

  static TripleNode iri(std::string v) { return {Kind::Iri, std::move(v), {}}; }
  static TripleNode blank(std::string v) { return {Kind::Blank, std::move(v), {}}; }
  static TripleNode literal(std::string v, std::string dt) {
    return {Kind::Literal, std::move(v), std::move(dt)};
  }

  friend bool operator==(const TripleNode&, const TripleNode&) = default;
  friend auto operator<=>(const TripleNode&, const TripleNode&) = default;
};

struct Triple {
  TripleNode subject;
  std::string predicate;
  TripleNode object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Deterministic triple expansion of the whole document: classes, datatype
// properties, object properties, restrictions, keys, annotations,
// individuals, each group sorted by IRI.
std::vector<Triple> expand_triples(const OwlDocument& doc);

}  // namespace rdb2owl

#endif
