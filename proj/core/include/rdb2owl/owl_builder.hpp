#ifndef RDB2OWL_OWL_BUILDER_HPP
#define RDB2OWL_OWL_BUILDER_HPP

#include <string>
#include <string_view>

#include "rdb2owl/cdm.hpp"
#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/owl_model.hpp"

namespace rdb2owl {

// Fixed SQL-to-XSD type map.
std::string map_type(SqlType t);

// Makes a valid NCName fragment: keeps [A-Za-z0-9-], escapes every other
// byte (including '_') as _xHH so distinct inputs stay distinct. A leading
// digit or '-' is escaped too.
std::string sanitize_ncname(std::string_view s);

// Datatype property local name, already NCName-sanitized: the bare attribute
// name when it is unique across the whole model, otherwise class-prefixed
// ("Customer_Name").
std::string attribute_property_local(const CdmModel& model, const CdmClass& cls,
                                     const CdmAttribute& attr);

struct OntologyOptions {
  bool attr_restrictions = true;  // cardinality restrictions on datatype properties
  bool emit_length = false;       // maxLength annotations from column lengths
  bool owl2_keys = false;         // owl:hasKey axioms from primary keys
};

// Schema translation: classes, datatype properties (functional), object
// properties with named inverses, cardinality restrictions, optional key
// axioms. `base_iri` must be absolute and end in '#' or '/'.
OwlDocument build_ontology(const CdmModel& model, const std::string& base_iri,
                           Diagnostics& diags, const OntologyOptions& opts = {});

}  // namespace rdb2owl

#endif
