#ifndef RDB2OWL_CONVERT_HPP
#define RDB2OWL_CONVERT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdb2owl/cdm.hpp"
#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/owl_model.hpp"

namespace rdb2owl {

// Individual identity: base + class name + one '_'-separated sanitized
// segment per primary-key value. Sanitization is injective, so distinct key
// tuples always mint distinct IRIs.
std::string mint_iri(std::string_view class_name, const std::vector<std::string>& pk_values,
                     std::string_view base);

struct CoercedLiteral {
  std::string lexical;
  std::string datatype;

  friend bool operator==(const CoercedLiteral&, const CoercedLiteral&) = default;
};

// Validates and canonicalizes one non-NULL cell for its column type.
// nullopt = invalid lexical form (caller reports LiteralCoercionError).
std::optional<CoercedLiteral> coerce_literal(std::string_view cell, SqlType type);

struct ConvertOptions {
  bool strict_ri = false;  // dangling FK targets become errors
};

// Converts recordsets into individuals on `doc` (which must be the
// build_ontology output for the same model): one typed individual per
// base-relation row, literal assertions for non-NULL attribute cells, one
// object assertion per fully non-NULL FK; junction rows add one object
// assertion to the source-side individual and mint nothing.
void convert_recordsets(const std::vector<Recordset>& data, const CdmModel& cdm,
                        OwlDocument& doc, Diagnostics& diags, const ConvertOptions& opts = {});

}  // namespace rdb2owl

#endif
