#ifndef RDB2OWL_MTRDB_HPP
#define RDB2OWL_MTRDB_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/schema.hpp"

namespace rdb2owl {

// Field metadata: name, type, length, nullability, default.
struct Field {
  std::string name;
  SqlType type = SqlType::Int;
  std::optional<int> length;
  std::optional<int> scale;
  bool nullable = true;
  std::optional<std::string> default_value;

  friend bool operator==(const Field&, const Field&) = default;
};

struct ForeignKey {
  std::vector<std::string> columns;          // ordered FK columns in the holder
  std::string referenced_relation;
  std::vector<std::string> referenced_pk;    // equals the referenced relation's PK

  friend bool operator==(const ForeignKey&, const ForeignKey&) = default;
};

struct Relation {
  std::string name;
  std::vector<Field> fields;
  std::vector<std::string> primary_key;
  std::vector<ForeignKey> foreign_keys;
  std::vector<std::vector<std::string>> unique_keys;

  const Field* find_field(std::string_view name) const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// min..max; max absent = unbounded.
struct Cardinality {
  unsigned min = 0;
  std::optional<unsigned> max;

  std::string to_string() const;

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

// Participation of the two ends of a foreign-key link. holder_side is how
// many referenced rows one holder row links to; referenced_side is how many
// holder rows one referenced row may be linked from.
struct CardinalityPair {
  Cardinality holder_side{1, 1};
  Cardinality referenced_side{0, std::nullopt};

  friend bool operator==(const CardinalityPair&, const CardinalityPair&) = default;
};

// One relationship per foreign key: source is the referenced relation,
// target the referencing one.
struct Relationship {
  std::vector<std::string> source_pk;   // primary key columns of `source`
  std::string source;                   // referenced relation
  std::vector<std::string> fk_columns;  // FK columns in `target`
  std::string target;                   // referencing relation
  CardinalityPair cardinality;
  bool self_referential = false;

  friend bool operator==(const Relationship&, const Relationship&) = default;
};

struct Mtrdb {
  std::vector<Relation> relations;
  std::vector<Relationship> relationships;

  const Relation* find_relation(std::string_view name) const;

  friend bool operator==(const Mtrdb&, const Mtrdb&) = default;
};

struct ExtractOptions {
  // When set, a table without a primary key is an error instead of falling
  // back to the full column list as a surrogate composite key.
  bool strict_keys = false;
};

// Builds the metadata representation from a parsed schema: one Relation per
// table in source order, one Relationship per foreign key. Foreign keys are
// resolved here (targets may be declared later in the DDL than their holders).
Mtrdb extract_mtrdb(const SchemaAst& schema, Diagnostics& diags, const ExtractOptions& opts = {});

// Cardinality inference for one foreign key of `holder`:
//   holder side    min = 0 if any FK column is nullable, else 1; max = 1.
//   referenced side min = 0; max = 1 if the FK column set equals a unique key
//                   or the primary key of the holder, else unbounded.
CardinalityPair derive_cardinality(const ForeignKey& fk, const Relation& holder);

// Structural well-formedness check; returns one diagnostic per violation.
std::vector<Diagnostic> validate_mtrdb(const Mtrdb& m);

// Indented, line-oriented text dump (relation -> fields -> keys -> relationships).
std::string dump_mtrdb(const Mtrdb& m);

}  // namespace rdb2owl

#endif
