// rdb2owl: translate a relational database dump (DDL + CSV/INSERT data)
// into an OWL ontology with instance data.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rdb2owl/pipeline.hpp"

int main(int argc, char** argv) {
  using namespace rdb2owl;

  CLI::App app{"Relational database to OWL ontology translator"};
  app.set_config("--config")->configurable(false);

  RunConfig config;
  std::string data_path;
  std::string format = "rdfxml";
  std::string profile = "owl1";
  std::string diag_format = "text";

  app.add_option("--ddl", config.ddl_path, "DDL dump (.sql) with CREATE TABLE statements")
      ->required();
  app.add_option("--data", data_path,
                 "Data source: a directory of <TableName>.csv files or one .sql file of "
                 "INSERT statements");
  app.add_option("--base", config.base_iri, "Base IRI (absolute, ending in '#' or '/')")
      ->capture_default_str();
  app.add_option("--out", config.output_path, "Output file (.owl or .ttl)");
  app.add_option("--format", format, "Output format: rdfxml|turtle")
      ->check(CLI::IsMember({"rdfxml", "turtle"}))
      ->capture_default_str();
  app.add_option("--profile", profile, "OWL profile: owl1|owl2 (owl2 adds owl:hasKey axioms)")
      ->check(CLI::IsMember({"owl1", "owl2"}))
      ->capture_default_str();
  app.add_flag("--attr-restrictions,!--no-attr-restrictions", config.attr_restrictions,
               "Cardinality restrictions on datatype properties (default on)");
  app.add_flag("--emit-length", config.emit_length, "maxLength annotations from column lengths");
  app.add_flag("--strict-ri", config.strict_ri, "Dangling foreign-key targets become errors");
  app.add_flag("--strict-keys", config.strict_keys, "Tables without a primary key are errors");
  app.add_flag("--split-data", config.split_data,
               "Write schema and individuals to two files (<out> and <out stem>_data)");
  app.add_flag("--dump-mtrdb", config.dump_mtrdb, "Print the extracted metadata as a text tree");
  app.add_flag("--dump-cdm", config.dump_cdm, "Print the canonical data model as a text tree");
  app.add_option("--diag-format", diag_format, "Diagnostic output: text|json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  config.format = format == "turtle" ? OutputFormat::Turtle : OutputFormat::RdfXml;
  config.profile = profile == "owl2" ? Profile::Owl2 : Profile::Owl1;
  if (!data_path.empty()) {
    config.data_path = data_path;
    config.data_kind = std::filesystem::is_directory(data_path) ? DataSourceKind::CsvDir
                                                                : DataSourceKind::InsertFile;
  }

  RunResult result = run(config);

  for (const auto& d : result.diags.items()) {
    if (diag_format == "json-lines")
      std::cerr << d.to_json_line() << "\n";
    else
      std::cerr << d.to_text() << "\n";
  }
  if (!result.dump_text.empty()) std::cout << result.dump_text;
  return result.exit_code;
}
