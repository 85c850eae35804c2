#ifndef RDB2OWL_OWL_WRITER_HPP
#define RDB2OWL_OWL_WRITER_HPP

#include <string>

#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/owl_model.hpp"

namespace rdb2owl {

// RDF/XML serialization. Entities under the base IRI use rdf:ID (when the
// base ends in '#') and are referenced with rdf:resource. Deterministic:
// classes, datatype properties, object properties, restrictions, keys,
// annotations, individuals, each sorted by IRI.
std::string serialize_rdfxml(const OwlDocument& doc, Diagnostics& diags);

// Turtle serialization of the same axioms; its triple multiset equals the
// RDF/XML one.
std::string serialize_turtle(const OwlDocument& doc, Diagnostics& diags);

bool is_ncname(std::string_view s);

}  // namespace rdb2owl

#endif
