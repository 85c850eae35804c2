#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rdb2owl/convert.hpp"
#include "rdb2owl/data_loader.hpp"
#include "rdb2owl/ddl_parser.hpp"
#include "rdb2owl/owl_builder.hpp"

namespace rdb2owl::testing {

std::filesystem::path fixture_dir() { return RDB2OWL_FIXTURE_DIR; }

std::filesystem::path fixture_path(const std::string& name) { return fixture_dir() / name; }

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> corpus_schemas() {
  return {
      "fig3.sql",          "composite_keys.sql", "self_ref.sql",  "keyless.sql",
      "assoc_class.sql",   "nullable_fk.sql",    "dup_names.sql", "defaults.sql",
      "uniques.sql",       "types.sql",          "quoted_idents.sql",
  };
}

namespace {
void require_clean(const Diagnostics& diags, const std::string& stage) {
  if (!diags.has_errors()) return;
  std::string msg = "fixture stage " + stage + " reported errors:";
  for (const auto& d : diags.items()) msg += "\n  " + d.to_text();
  throw std::runtime_error(msg);
}
}  // namespace

SchemaAst parse_fixture_schema(const std::string& name, Diagnostics& diags) {
  SchemaAst schema = parse_ddl(read_fixture(name), diags, name);
  require_clean(diags, "parse_ddl(" + name + ")");
  return schema;
}

Mtrdb fixture_mtrdb(const std::string& name, Diagnostics& diags) {
  SchemaAst schema = parse_fixture_schema(name, diags);
  Mtrdb m = extract_mtrdb(schema, diags);
  require_clean(diags, "extract_mtrdb(" + name + ")");
  return m;
}

CdmModel fixture_cdm(const std::string& name, Diagnostics& diags) {
  Mtrdb m = fixture_mtrdb(name, diags);
  CdmModel cdm = build_cdm(m, diags);
  require_clean(diags, "build_cdm(" + name + ")");
  return cdm;
}

SamplePipeline run_sample(bool with_data) {
  SamplePipeline p;
  p.schema = parse_fixture_schema("fig3.sql", p.diags);
  p.mtrdb = extract_mtrdb(p.schema, p.diags);
  require_clean(p.diags, "extract_mtrdb");
  p.cdm = build_cdm(p.mtrdb, p.diags);
  require_clean(p.diags, "build_cdm");
  p.doc = build_ontology(p.cdm, kBase, p.diags);
  require_clean(p.diags, "build_ontology");
  if (with_data) {
    std::vector<Recordset> data;
    for (const auto& table : p.schema.tables) {
      auto csv = fixture_dir() / "fig3_csv" / (table.name + ".csv");
      data.push_back(load_csv(csv, table, p.diags));
    }
    require_clean(p.diags, "load_csv");
    convert_recordsets(data, p.cdm, p.doc, p.diags);
    require_clean(p.diags, "convert_recordsets");
  }
  return p;
}

}  // namespace rdb2owl::testing
