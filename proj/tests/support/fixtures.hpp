#ifndef RDB2OWL_TESTS_FIXTURES_HPP
#define RDB2OWL_TESTS_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "rdb2owl/cdm.hpp"
#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/mtrdb.hpp"
#include "rdb2owl/owl_model.hpp"
#include "rdb2owl/schema.hpp"

namespace rdb2owl::testing {

inline constexpr const char* kBase = "http://example.org/store#";

std::filesystem::path fixture_dir();
std::filesystem::path fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);

// Paths (relative to the fixture dir) of every schema in the corpus.
std::vector<std::string> corpus_schemas();

// Pipeline stages chained on one fixture schema; each asserts (via throw)
// that no errors were reported so tests can use them as a baseline.
SchemaAst parse_fixture_schema(const std::string& name, Diagnostics& diags);
Mtrdb fixture_mtrdb(const std::string& name, Diagnostics& diags);
CdmModel fixture_cdm(const std::string& name, Diagnostics& diags);

// The full sample pipeline: schema + CSV data -> populated document.
struct SamplePipeline {
  SchemaAst schema;
  Mtrdb mtrdb;
  CdmModel cdm;
  OwlDocument doc;  // schema axioms + individuals
  Diagnostics diags;
};
SamplePipeline run_sample(bool with_data = true);

}  // namespace rdb2owl::testing

#endif
