// Stage-by-stage throughput on the bundled sample schema plus a generated
// wide schema, so regressions in any one stage show up in isolation.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "rdb2owl/cdm.hpp"
#include "rdb2owl/convert.hpp"
#include "rdb2owl/data_loader.hpp"
#include "rdb2owl/ddl_parser.hpp"
#include "rdb2owl/mtrdb.hpp"
#include "rdb2owl/owl_builder.hpp"
#include "rdb2owl/owl_writer.hpp"

using namespace rdb2owl;

namespace {

constexpr const char* kBase = "http://example.org/store#";

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(RDB2OWL_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A 60-table chained schema with data columns and one FK per table.
std::string wide_schema() {
  std::ostringstream ddl;
  for (int t = 0; t < 60; ++t) {
    ddl << "CREATE TABLE T" << t << " (\n  T" << t << "ID INT PRIMARY KEY";
    for (int c = 0; c < 8; ++c)
      ddl << ",\n  C" << c << " VARCHAR(40) NOT NULL";
    if (t > 0)
      ddl << ",\n  ParentID INT,\n  FOREIGN KEY (ParentID) REFERENCES T" << (t - 1) << " (T"
          << (t - 1) << "ID)";
    ddl << "\n);\n";
  }
  return ddl.str();
}

struct Prepared {
  SchemaAst schema;
  Mtrdb mtrdb;
  CdmModel cdm;
  OwlDocument doc;
};

Prepared prepare(const std::string& ddl, bool with_data) {
  Prepared p;
  Diagnostics diags;
  p.schema = parse_ddl(ddl, diags);
  p.mtrdb = extract_mtrdb(p.schema, diags);
  p.cdm = build_cdm(p.mtrdb, diags);
  p.doc = build_ontology(p.cdm, kBase, diags);
  if (with_data) {
    std::vector<Recordset> data;
    for (const auto& table : p.schema.tables) {
      auto path = std::string(RDB2OWL_FIXTURE_DIR) + "/fig3_csv/" + table.name + ".csv";
      data.push_back(load_csv(path, table, diags));
    }
    convert_recordsets(data, p.cdm, p.doc, diags);
  }
  return p;
}

void BM_ParseDdl(benchmark::State& state, const std::string& ddl) {
  for (auto _ : state) {
    Diagnostics diags;
    benchmark::DoNotOptimize(parse_ddl(ddl, diags));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * ddl.size()));
}

void BM_ExtractAndModel(benchmark::State& state, const std::string& ddl) {
  Diagnostics diags;
  SchemaAst schema = parse_ddl(ddl, diags);
  for (auto _ : state) {
    Diagnostics d;
    Mtrdb m = extract_mtrdb(schema, d);
    benchmark::DoNotOptimize(build_cdm(m, d));
  }
}

void BM_BuildOntology(benchmark::State& state, const std::string& ddl) {
  Diagnostics diags;
  SchemaAst schema = parse_ddl(ddl, diags);
  Mtrdb m = extract_mtrdb(schema, diags);
  CdmModel cdm = build_cdm(m, diags);
  for (auto _ : state) {
    Diagnostics d;
    benchmark::DoNotOptimize(build_ontology(cdm, kBase, d));
  }
}

void BM_SerializeRdfXml(benchmark::State& state, const std::string& ddl, bool with_data) {
  Prepared p = prepare(ddl, with_data);
  for (auto _ : state) {
    Diagnostics d;
    benchmark::DoNotOptimize(serialize_rdfxml(p.doc, d));
  }
}

void BM_SerializeTurtle(benchmark::State& state, const std::string& ddl, bool with_data) {
  Prepared p = prepare(ddl, with_data);
  for (auto _ : state) {
    Diagnostics d;
    benchmark::DoNotOptimize(serialize_turtle(p.doc, d));
  }
}

void BM_ConvertSampleData(benchmark::State& state) {
  std::string ddl = read_fixture("fig3.sql");
  Prepared p = prepare(ddl, false);
  Diagnostics diags;
  std::vector<Recordset> data;
  for (const auto& table : p.schema.tables) {
    auto path = std::string(RDB2OWL_FIXTURE_DIR) + "/fig3_csv/" + table.name + ".csv";
    data.push_back(load_csv(path, table, diags));
  }
  for (auto _ : state) {
    OwlDocument doc = p.doc;
    Diagnostics d;
    convert_recordsets(data, p.cdm, doc, d);
    benchmark::DoNotOptimize(doc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string sample = read_fixture("fig3.sql");
  std::string wide = wide_schema();

  benchmark::RegisterBenchmark("parse_ddl/sample",
                               [sample](benchmark::State& s) { BM_ParseDdl(s, sample); });
  benchmark::RegisterBenchmark("parse_ddl/wide",
                               [wide](benchmark::State& s) { BM_ParseDdl(s, wide); });
  benchmark::RegisterBenchmark("extract_and_model/sample",
                               [sample](benchmark::State& s) { BM_ExtractAndModel(s, sample); });
  benchmark::RegisterBenchmark("extract_and_model/wide",
                               [wide](benchmark::State& s) { BM_ExtractAndModel(s, wide); });
  benchmark::RegisterBenchmark("build_ontology/sample",
                               [sample](benchmark::State& s) { BM_BuildOntology(s, sample); });
  benchmark::RegisterBenchmark("build_ontology/wide",
                               [wide](benchmark::State& s) { BM_BuildOntology(s, wide); });
  benchmark::RegisterBenchmark(
      "serialize_rdfxml/sample+data",
      [sample](benchmark::State& s) { BM_SerializeRdfXml(s, sample, true); });
  benchmark::RegisterBenchmark(
      "serialize_rdfxml/wide", [wide](benchmark::State& s) { BM_SerializeRdfXml(s, wide, false); });
  benchmark::RegisterBenchmark(
      "serialize_turtle/sample+data",
      [sample](benchmark::State& s) { BM_SerializeTurtle(s, sample, true); });
  benchmark::RegisterBenchmark(
      "serialize_turtle/wide", [wide](benchmark::State& s) { BM_SerializeTurtle(s, wide, false); });
  benchmark::RegisterBenchmark("convert/sample_data",
                               [](benchmark::State& s) { BM_ConvertSampleData(s); });

  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
