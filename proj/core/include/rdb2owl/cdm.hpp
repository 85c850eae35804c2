#ifndef RDB2OWL_CDM_HPP
#define RDB2OWL_CDM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/mtrdb.hpp"

namespace rdb2owl {

enum class RelationKind { Base, Junction };

struct CdmAttribute {
  std::string name;
  SqlType type = SqlType::Int;
  std::optional<int> length;
  std::optional<int> scale;
  std::optional<std::string> default_value;
  bool nullable = true;  // carried through for the OWL restriction rules
  bool is_primary_key = false;

  friend bool operator==(const CdmAttribute&, const CdmAttribute&) = default;
};

enum class RelationshipOrigin { ForeignKey, Junction };

struct CdmRelationship {
  std::string name;
  CardinalityPair cardinality;  // holder_side = source-class side
  std::string source_class;
  std::string dest_class;
  RelationshipOrigin origin = RelationshipOrigin::ForeignKey;
  std::string origin_relation;  // relation holding the FK, or the junction relation
  int origin_fk_index = 0;      // index into that relation's foreign_keys

  friend bool operator==(const CdmRelationship&, const CdmRelationship&) = default;
};

// Foreign key of a base class together with its relationship name; used by
// the instance conversion to turn FK cells into object assertions.
struct CdmClassFk {
  ForeignKey fk;
  std::string relationship_name;
  std::string target_class;

  friend bool operator==(const CdmClassFk&, const CdmClassFk&) = default;
};

struct CdmClass {
  std::string name;
  std::vector<CdmAttribute> attributes;
  std::vector<std::string> primary_key;  // attribute names
  std::vector<std::vector<std::string>> unique_keys;
  std::vector<CdmClassFk> foreign_keys;
  std::vector<std::size_t> relationship_indices;  // relationships with this class as source

  const CdmAttribute* find_attribute(std::string_view name) const;

  friend bool operator==(const CdmClass&, const CdmClass&) = default;
};

// Junction relation collapsed into one many-to-many relationship.
struct CdmJunction {
  std::string relation;           // source MTRDB relation name
  std::string relationship_name;
  ForeignKey source_fk;           // first-declared FK; its target is the source class
  ForeignKey dest_fk;
  std::string source_class;
  std::string dest_class;

  friend bool operator==(const CdmJunction&, const CdmJunction&) = default;
};

struct CdmModel {
  std::vector<CdmClass> classes;
  std::vector<CdmRelationship> relationships;
  std::vector<std::string> junction_relations;
  std::vector<CdmJunction> junctions;

  const CdmClass* find_class(std::string_view name) const;
  const CdmJunction* find_junction(std::string_view relation) const;

  friend bool operator==(const CdmModel&, const CdmModel&) = default;
};

// A relation is a junction iff its primary key has >= 2 columns, every PK
// column belongs to some FK, it has exactly 2 FKs, and it has no non-PK
// columns. Tables with extra data columns stay base (association classes).
RelationKind classify_relation(const Relation& r, const Mtrdb& m);

// Relationship naming: FK -> strip one trailing "id" (plus separator) from
// the first FK column, "has" + UpperCamelCase remainder (target class name if
// the remainder is empty); junction -> relation name in lowerCamelCase.
// Model-wide collisions are resolved in build_cdm.
std::string name_fk_relationship(const ForeignKey& fk, const Mtrdb& m);
std::string name_junction_relationship(const Relation& junction);

// Builds the canonical model: one class per base relation, FK columns become
// relationships, junction relations collapse to one relationship each.
CdmModel build_cdm(const Mtrdb& m, Diagnostics& diags);

// Indented, line-oriented text dump (class -> attributes -> relationships).
std::string dump_cdm(const CdmModel& model);

}  // namespace rdb2owl

#endif
