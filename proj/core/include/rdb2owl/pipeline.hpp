#ifndef RDB2OWL_PIPELINE_HPP
#define RDB2OWL_PIPELINE_HPP

#include <string>
#include <vector>

#include "rdb2owl/diagnostics.hpp"

namespace rdb2owl {

enum class OutputFormat { RdfXml, Turtle };
enum class Profile { Owl1, Owl2 };
enum class DataSourceKind { None, CsvDir, InsertFile };

struct RunConfig {
  std::string ddl_path;
  DataSourceKind data_kind = DataSourceKind::None;
  std::string data_path;
  std::string base_iri = "http://example.org/onto#";
  std::string output_path;  // empty: no file output (dump-only runs)
  OutputFormat format = OutputFormat::RdfXml;
  Profile profile = Profile::Owl1;
  bool attr_restrictions = true;
  bool emit_length = false;
  bool strict_ri = false;
  bool strict_keys = false;
  bool split_data = false;  // schema and individuals in separate files
  bool dump_mtrdb = false;
  bool dump_cdm = false;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 input errors, 2 internal failure
  Diagnostics diags;
  std::string dump_text;  // --dump-mtrdb / --dump-cdm output
  std::vector<std::string> outputs_written;
};

// Full pipeline: parse DDL, extract metadata, build CDM and ontology, load
// and convert data, serialize. Each stage reports all of its errors before
// the pipeline stops.
RunResult run(const RunConfig& config);

}  // namespace rdb2owl

#endif
