#ifndef RDB2OWL_OWL_ORDER_HPP
#define RDB2OWL_OWL_ORDER_HPP

#include <string_view>
#include <vector>

#include "rdb2owl/owl_model.hpp"

namespace rdb2owl::detail {

// Shared serialization order: both writers and the triple expansion emit
// groups in this sequence, each sorted.
struct OrderedAxioms {
  std::vector<const ClassDecl*> classes;
  std::vector<const DatatypePropertyAxiom*> datatype_properties;
  std::vector<const ObjectPropertyAxiom*> object_properties;
  std::vector<const CardinalityRestriction*> restrictions;
  std::vector<const HasKeyAxiom*> keys;
  std::vector<const AnnotationAxiom*> annotations;
  std::vector<const Individual*> individuals;
  std::vector<const OrphanAssertion*> orphans;
};

OrderedAxioms ordered_view(const OwlDocument& doc);

std::string_view cardinality_predicate_local(CardinalityKind kind);

}  // namespace rdb2owl::detail

#endif
