#include "rdb2owl/owl_writer.hpp"

#include <cctype>
#include <sstream>

#include "owl_order.hpp"

namespace rdb2owl {

bool is_ncname(std::string_view s) {
  if (s.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) && s[0] != '_') return false;
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '-' && c != '.') return false;
  }
  return true;
}

namespace {

std::string xml_escape_text(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string xml_escape_attr(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class RdfXmlWriter {
 public:
  RdfXmlWriter(const OwlDocument& doc, Diagnostics& diags) : doc_(doc), diags_(diags) {
    hash_base_ = !doc.base_iri.empty() && doc.base_iri.back() == '#';
  }

  std::string write() {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ << "<rdf:RDF\n";
    out_ << "    xmlns:rdf=\"" << ns::rdf << "\"\n";
    out_ << "    xmlns:rdfs=\"" << ns::rdfs << "\"\n";
    out_ << "    xmlns:owl=\"" << ns::owl << "\"\n";
    out_ << "    xmlns:xsd=\"" << ns::xsd << "\"\n";
    out_ << "    xmlns=\"" << xml_escape_attr(doc_.base_iri) << "\"\n";
    out_ << "    xml:base=\"" << xml_escape_attr(xml_base()) << "\">\n";

    auto v = detail::ordered_view(doc_);

    for (const auto* c : v.classes) {
      out_ << "  <owl:Class " << define_attr(c->iri) << "/>\n";
    }
    for (const auto* p : v.datatype_properties) {
      out_ << "  <owl:DatatypeProperty " << define_attr(p->iri) << ">\n";
      if (p->functional)
        out_ << "    <rdf:type rdf:resource=\"" << ns::owl << "FunctionalProperty\"/>\n";
      out_ << "    <rdfs:domain rdf:resource=\"" << ref(p->domain) << "\"/>\n";
      out_ << "    <rdfs:range rdf:resource=\"" << ref(p->range) << "\"/>\n";
      out_ << "  </owl:DatatypeProperty>\n";
    }
    for (const auto* p : v.object_properties) {
      out_ << "  <owl:ObjectProperty " << define_attr(p->iri) << ">\n";
      out_ << "    <rdfs:domain rdf:resource=\"" << ref(p->domain) << "\"/>\n";
      out_ << "    <rdfs:range rdf:resource=\"" << ref(p->range) << "\"/>\n";
      if (p->inverse_of)
        out_ << "    <owl:inverseOf rdf:resource=\"" << ref(*p->inverse_of) << "\"/>\n";
      out_ << "  </owl:ObjectProperty>\n";
    }
    for (const auto* r : v.restrictions) {
      // rdf:Description: the class is already typed by its declaration above.
      out_ << "  <rdf:Description rdf:about=\"" << ref(r->class_iri) << "\">\n";
      out_ << "    <rdfs:subClassOf rdf:nodeID=\"" << r->node_id << "\"/>\n";
      out_ << "  </rdf:Description>\n";
      out_ << "  <owl:Restriction rdf:nodeID=\"" << r->node_id << "\">\n";
      out_ << "    <owl:onProperty rdf:resource=\"" << ref(r->property_iri) << "\"/>\n";
      out_ << "    <owl:" << detail::cardinality_predicate_local(r->kind)
           << " rdf:datatype=\"" << ns::xsd << "nonNegativeInteger\">" << r->value << "</owl:"
           << detail::cardinality_predicate_local(r->kind) << ">\n";
      out_ << "  </owl:Restriction>\n";
    }
    for (const auto* k : v.keys) {
      out_ << "  <rdf:Description rdf:about=\"" << ref(k->class_iri) << "\">\n";
      if (k->list_node_ids.empty())
        out_ << "    <owl:hasKey rdf:resource=\"" << ns::rdf << "nil\"/>\n";
      else
        out_ << "    <owl:hasKey rdf:nodeID=\"" << k->list_node_ids[0] << "\"/>\n";
      out_ << "  </rdf:Description>\n";
      for (std::size_t i = 0; i < k->list_node_ids.size(); ++i) {
        out_ << "  <rdf:Description rdf:nodeID=\"" << k->list_node_ids[i] << "\">\n";
        out_ << "    <rdf:first rdf:resource=\"" << ref(k->property_iris[i]) << "\"/>\n";
        if (i + 1 < k->list_node_ids.size())
          out_ << "    <rdf:rest rdf:nodeID=\"" << k->list_node_ids[i + 1] << "\"/>\n";
        else
          out_ << "    <rdf:rest rdf:resource=\"" << ns::rdf << "nil\"/>\n";
        out_ << "  </rdf:Description>\n";
      }
    }
    for (const auto* a : v.annotations) {
      out_ << "  <rdf:Description rdf:about=\"" << ref(a->subject) << "\">\n";
      out_ << "    <" << property_qname(a->property) << " rdf:datatype=\"" << ns::xsd
           << "string\">" << xml_escape_text(a->value) << "</" << property_qname(a->property)
           << ">\n";
      out_ << "  </rdf:Description>\n";
    }
    for (const auto* ind : v.individuals) {
      std::string type_name = local_name(ind->class_iri);
      if (!check_ncname(type_name, ind->class_iri)) type_name = "rdf:Description";
      bool typed_element = type_name != "rdf:Description";
      out_ << "  <" << type_name << " " << define_attr(ind->iri) << ">\n";
      if (!typed_element)
        out_ << "    <rdf:type rdf:resource=\"" << ref(ind->class_iri) << "\"/>\n";
      for (const auto& lit : ind->literals)
        out_ << "    <" << property_qname(lit.property) << " rdf:datatype=\""
             << xml_escape_attr(lit.datatype) << "\">" << xml_escape_text(lit.lexical) << "</"
             << property_qname(lit.property) << ">\n";
      for (const auto& obj : ind->objects)
        out_ << "    <" << property_qname(obj.property) << " rdf:resource=\"" << ref(obj.target)
             << "\"/>\n";
      out_ << "  </" << type_name << ">\n";
    }
    for (const auto* o : v.orphans) {
      out_ << "  <rdf:Description rdf:about=\"" << ref(o->subject) << "\">\n";
      out_ << "    <" << property_qname(o->property) << " rdf:resource=\"" << ref(o->target)
           << "\"/>\n";
      out_ << "  </rdf:Description>\n";
    }
    out_ << "</rdf:RDF>\n";
    return out_.str();
  }

 private:
  std::string xml_base() const {
    if (hash_base_) return doc_.base_iri.substr(0, doc_.base_iri.size() - 1);
    return doc_.base_iri;
  }
  bool under_base(std::string_view iri) const {
    return iri.size() > doc_.base_iri.size() &&
           iri.substr(0, doc_.base_iri.size()) == doc_.base_iri;
  }
  std::string local_name(std::string_view iri) const {
    if (under_base(iri)) return std::string(iri.substr(doc_.base_iri.size()));
    return {};
  }
  bool check_ncname(std::string_view name, std::string_view iri) {
    if (is_ncname(name)) return true;
    diags_.error(diag::InvalidNCName, Location{},
                 "local name '" + std::string(name) + "' of <" + std::string(iri) +
                     "> is not a valid NCName");
    return false;
  }
  // Attribute defining an entity: rdf:ID for hash-base locals, rdf:about otherwise.
  std::string define_attr(const std::string& iri) {
    std::string local = local_name(iri);
    if (hash_base_ && !local.empty() && check_ncname(local, iri))
      return "rdf:ID=\"" + local + "\"";
    return "rdf:about=\"" + xml_escape_attr(iri) + "\"";
  }
  // Reference form for rdf:resource / rdf:about positions.
  std::string ref(const std::string& iri) const {
    if (hash_base_ && under_base(iri)) return "#" + xml_escape_attr(local_name(iri));
    return xml_escape_attr(iri);
  }
  // Property element name; base-local properties live in the default namespace.
  std::string property_qname(const std::string& iri) {
    std::string local = local_name(iri);
    if (!local.empty() && check_ncname(local, iri)) return local;
    for (const char* prefix_ns : {ns::rdf, ns::rdfs, ns::owl, ns::xsd}) {
      std::string_view nsv(prefix_ns);
      if (iri.size() > nsv.size() && std::string_view(iri).substr(0, nsv.size()) == nsv) {
        std::string l(iri.substr(nsv.size()));
        const char* prefix = prefix_ns == ns::rdf    ? "rdf"
                             : prefix_ns == ns::rdfs ? "rdfs"
                             : prefix_ns == ns::owl  ? "owl"
                                                     : "xsd";
        if (is_ncname(l)) return std::string(prefix) + ":" + l;
      }
    }
    check_ncname(local, iri);
    return "rdf:Description";  // unreachable for documents we build
  }

  const OwlDocument& doc_;
  Diagnostics& diags_;
  std::ostringstream out_;
  bool hash_base_ = false;
};

std::string turtle_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

bool valid_pn_local(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '-') return false;
  }
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  return std::isalnum(c0) || s[0] == '_';
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const OwlDocument& doc) : doc_(doc) {}

  std::string write() {
    out_ << "@prefix rdf: <" << ns::rdf << "> .\n";
    out_ << "@prefix rdfs: <" << ns::rdfs << "> .\n";
    out_ << "@prefix owl: <" << ns::owl << "> .\n";
    out_ << "@prefix xsd: <" << ns::xsd << "> .\n";
    out_ << "@prefix : <" << doc_.base_iri << "> .\n\n";

    const std::string rdf_type = std::string(ns::rdf) + "type";
    for (const auto& t : expand_triples(doc_)) {
      out_ << term(t.subject) << " ";
      if (t.predicate == rdf_type)
        out_ << "a";
      else
        out_ << iri_term(t.predicate);
      out_ << " " << term(t.object) << " .\n";
    }
    return out_.str();
  }

 private:
  std::string iri_term(const std::string& iri) const {
    struct Prefix {
      const char* name;
      const char* iri;
    };
    const Prefix prefixes[] = {
        {"rdf", ns::rdf}, {"rdfs", ns::rdfs}, {"owl", ns::owl}, {"xsd", ns::xsd}};
    std::string_view v(iri);
    if (v.size() > doc_.base_iri.size() && v.substr(0, doc_.base_iri.size()) == doc_.base_iri) {
      std::string_view local = v.substr(doc_.base_iri.size());
      if (valid_pn_local(local)) return ":" + std::string(local);
    }
    for (const auto& p : prefixes) {
      std::string_view pv(p.iri);
      if (v.size() > pv.size() && v.substr(0, pv.size()) == pv) {
        std::string_view local = v.substr(pv.size());
        if (valid_pn_local(local)) return std::string(p.name) + ":" + std::string(local);
      }
    }
    return "<" + iri + ">";
  }

  std::string term(const TripleNode& n) const {
    switch (n.kind) {
      case TripleNode::Kind::Iri: return iri_term(n.value);
      case TripleNode::Kind::Blank: return "_:" + n.value;
      case TripleNode::Kind::Literal:
        return "\"" + turtle_escape(n.value) + "\"^^" + iri_term(n.datatype);
    }
    return {};
  }

  const OwlDocument& doc_;
  std::ostringstream out_;
};

}  // namespace

std::string serialize_rdfxml(const OwlDocument& doc, Diagnostics& diags) {
  return RdfXmlWriter(doc, diags).write();
}

std::string serialize_turtle(const OwlDocument& doc, Diagnostics& diags) {
  (void)diags;
  return TurtleWriter(doc).write();
}

}  // namespace rdb2owl
