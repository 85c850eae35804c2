#include "rdb2owl/owl_model.hpp"

#include <algorithm>

#include "owl_order.hpp"

namespace rdb2owl {

OwlDocument make_document(std::string base_iri) {
  OwlDocument doc;
  doc.base_iri = std::move(base_iri);
  doc.prefixes = {
      {"rdf", ns::rdf},
      {"rdfs", ns::rdfs},
      {"owl", ns::owl},
      {"xsd", ns::xsd},
      {"", doc.base_iri},
  };
  return doc;
}

bool OwlDocument::declares_class(std::string_view iri) const {
  for (const auto& ax : axioms)
    if (const auto* c = std::get_if<ClassDecl>(&ax))
      if (c->iri == iri) return true;
  return false;
}

const Individual* OwlDocument::find_individual(std::string_view iri) const {
  for (const auto& ind : individuals)
    if (ind.iri == iri) return &ind;
  return nullptr;
}

namespace detail {

OrderedAxioms ordered_view(const OwlDocument& doc) {
  OrderedAxioms v;
  for (const auto& ax : doc.axioms) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, ClassDecl>)
            v.classes.push_back(&a);
          else if constexpr (std::is_same_v<T, DatatypePropertyAxiom>)
            v.datatype_properties.push_back(&a);
          else if constexpr (std::is_same_v<T, ObjectPropertyAxiom>)
            v.object_properties.push_back(&a);
          else if constexpr (std::is_same_v<T, CardinalityRestriction>)
            v.restrictions.push_back(&a);
          else if constexpr (std::is_same_v<T, HasKeyAxiom>)
            v.keys.push_back(&a);
          else
            v.annotations.push_back(&a);
        },
        ax);
  }
  auto by_iri = [](const auto* a, const auto* b) { return a->iri < b->iri; };
  std::sort(v.classes.begin(), v.classes.end(), by_iri);
  std::sort(v.datatype_properties.begin(), v.datatype_properties.end(), by_iri);
  std::sort(v.object_properties.begin(), v.object_properties.end(), by_iri);
  std::sort(v.restrictions.begin(), v.restrictions.end(),
            [](const CardinalityRestriction* a, const CardinalityRestriction* b) {
              return std::tie(a->class_iri, a->property_iri, a->kind) <
                     std::tie(b->class_iri, b->property_iri, b->kind);
            });
  std::sort(v.keys.begin(), v.keys.end(), [](const HasKeyAxiom* a, const HasKeyAxiom* b) {
    return a->class_iri < b->class_iri;
  });
  std::sort(v.annotations.begin(), v.annotations.end(),
            [](const AnnotationAxiom* a, const AnnotationAxiom* b) {
              return std::tie(a->subject, a->property, a->value) <
                     std::tie(b->subject, b->property, b->value);
            });
  for (const auto& ind : doc.individuals) v.individuals.push_back(&ind);
  std::sort(v.individuals.begin(), v.individuals.end(), by_iri);
  for (const auto& o : doc.orphan_assertions) v.orphans.push_back(&o);
  std::sort(v.orphans.begin(), v.orphans.end(),
            [](const OrphanAssertion* a, const OrphanAssertion* b) {
              return std::tie(a->subject, a->property, a->target) <
                     std::tie(b->subject, b->property, b->target);
            });
  return v;
}

std::string_view cardinality_predicate_local(CardinalityKind kind) {
  switch (kind) {
    case CardinalityKind::Exact: return "cardinality";
    case CardinalityKind::Min: return "minCardinality";
    case CardinalityKind::Max: return "maxCardinality";
  }
  return "cardinality";
}

}  // namespace detail

std::vector<Triple> expand_triples(const OwlDocument& doc) {
  using detail::cardinality_predicate_local;
  std::vector<Triple> out;
  auto v = detail::ordered_view(doc);

  const std::string rdf_type = std::string(ns::rdf) + "type";
  const std::string nonneg = std::string(ns::xsd) + "nonNegativeInteger";

  for (const auto* c : v.classes)
    out.push_back({TripleNode::iri(c->iri), rdf_type,
                   TripleNode::iri(std::string(ns::owl) + "Class")});

  for (const auto* p : v.datatype_properties) {
    out.push_back({TripleNode::iri(p->iri), rdf_type,
                   TripleNode::iri(std::string(ns::owl) + "DatatypeProperty")});
    if (p->functional)
      out.push_back({TripleNode::iri(p->iri), rdf_type,
                     TripleNode::iri(std::string(ns::owl) + "FunctionalProperty")});
    out.push_back({TripleNode::iri(p->iri), std::string(ns::rdfs) + "domain",
                   TripleNode::iri(p->domain)});
    out.push_back({TripleNode::iri(p->iri), std::string(ns::rdfs) + "range",
                   TripleNode::iri(p->range)});
  }

  for (const auto* p : v.object_properties) {
    out.push_back({TripleNode::iri(p->iri), rdf_type,
                   TripleNode::iri(std::string(ns::owl) + "ObjectProperty")});
    out.push_back({TripleNode::iri(p->iri), std::string(ns::rdfs) + "domain",
                   TripleNode::iri(p->domain)});
    out.push_back({TripleNode::iri(p->iri), std::string(ns::rdfs) + "range",
                   TripleNode::iri(p->range)});
    if (p->inverse_of)
      out.push_back({TripleNode::iri(p->iri), std::string(ns::owl) + "inverseOf",
                     TripleNode::iri(*p->inverse_of)});
  }

  for (const auto* r : v.restrictions) {
    TripleNode node = TripleNode::blank(r->node_id);
    out.push_back({TripleNode::iri(r->class_iri), std::string(ns::rdfs) + "subClassOf", node});
    out.push_back({node, rdf_type, TripleNode::iri(std::string(ns::owl) + "Restriction")});
    out.push_back({node, std::string(ns::owl) + "onProperty", TripleNode::iri(r->property_iri)});
    out.push_back({node,
                   std::string(ns::owl) + std::string(cardinality_predicate_local(r->kind)),
                   TripleNode::literal(std::to_string(r->value), nonneg)});
  }

  for (const auto* k : v.keys) {
    const std::string nil = std::string(ns::rdf) + "nil";
    TripleNode head = k->list_node_ids.empty() ? TripleNode::iri(nil)
                                               : TripleNode::blank(k->list_node_ids[0]);
    out.push_back({TripleNode::iri(k->class_iri), std::string(ns::owl) + "hasKey", head});
    for (std::size_t i = 0; i < k->list_node_ids.size(); ++i) {
      TripleNode node = TripleNode::blank(k->list_node_ids[i]);
      out.push_back({node, std::string(ns::rdf) + "first",
                     TripleNode::iri(k->property_iris[i])});
      TripleNode rest = i + 1 < k->list_node_ids.size()
                            ? TripleNode::blank(k->list_node_ids[i + 1])
                            : TripleNode::iri(nil);
      out.push_back({node, std::string(ns::rdf) + "rest", rest});
    }
  }

  for (const auto* a : v.annotations)
    out.push_back({TripleNode::iri(a->subject), a->property,
                   TripleNode::literal(a->value, std::string(ns::xsd) + "string")});

  for (const auto* ind : v.individuals) {
    out.push_back({TripleNode::iri(ind->iri), rdf_type, TripleNode::iri(ind->class_iri)});
    for (const auto& lit : ind->literals)
      out.push_back({TripleNode::iri(ind->iri), lit.property,
                     TripleNode::literal(lit.lexical, lit.datatype)});
    for (const auto& obj : ind->objects)
      out.push_back({TripleNode::iri(ind->iri), obj.property, TripleNode::iri(obj.target)});
  }

  for (const auto* o : v.orphans)
    out.push_back({TripleNode::iri(o->subject), o->property, TripleNode::iri(o->target)});

  return out;
}

}  // namespace rdb2owl
