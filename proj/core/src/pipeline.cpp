#include "rdb2owl/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rdb2owl/cdm.hpp"
#include "rdb2owl/convert.hpp"
#include "rdb2owl/data_loader.hpp"
#include "rdb2owl/ddl_parser.hpp"
#include "rdb2owl/mtrdb.hpp"
#include "rdb2owl/owl_builder.hpp"
#include "rdb2owl/owl_writer.hpp"

namespace rdb2owl {

namespace {

namespace fs = std::filesystem;

bool read_file(const fs::path& path, std::string& out, Diagnostics& diags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    diags.error(diag::IoError, Location::at(path.string(), 0, 0), "cannot open file for reading");
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const fs::path& path, std::string_view content, Diagnostics& diags) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    diags.error(diag::IoError, Location::at(path.string(), 0, 0), "cannot open file for writing");
    return false;
  }
  out << content;
  return out.good();
}

bool valid_base_iri(const std::string& iri) {
  if (iri.empty()) return false;
  char tail = iri.back();
  if (tail != '#' && tail != '/') return false;
  auto colon = iri.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    unsigned char c = static_cast<unsigned char>(iri[i]);
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return std::isalpha(static_cast<unsigned char>(iri[0])) != 0;
}

fs::path data_output_path(const fs::path& out) {
  fs::path p = out;
  std::string stem = p.stem().string();
  std::string ext = p.extension().string();
  p.replace_filename(stem + "_data" + ext);
  return p;
}

int exit_code_for(const Diagnostics& diags) {
  if (!diags.has_errors()) return 0;
  for (const auto& d : diags.items())
    if (d.severity == Severity::Error &&
        (d.code == diag::InvalidNCName || d.code == diag::InternalError))
      return 2;
  return 1;
}

RunResult run_impl(const RunConfig& config) {
  RunResult result;
  Diagnostics& diags = result.diags;

  if (!valid_base_iri(config.base_iri)) {
    diags.error(diag::SyntaxError, Location{},
                "base IRI must be absolute and end in '#' or '/': '" + config.base_iri + "'");
    result.exit_code = 1;
    return result;
  }

  std::string ddl_text;
  if (!read_file(config.ddl_path, ddl_text, diags)) {
    result.exit_code = 1;
    return result;
  }
  SchemaAst schema = parse_ddl(ddl_text, diags, config.ddl_path);
  if (diags.has_errors()) {
    result.exit_code = 1;
    return result;
  }

  ExtractOptions extract_opts;
  extract_opts.strict_keys = config.strict_keys;
  Mtrdb mtrdb = extract_mtrdb(schema, diags, extract_opts);
  if (diags.has_errors()) {
    result.exit_code = 1;
    return result;
  }
  for (auto& d : validate_mtrdb(mtrdb)) {
    // A broken Mtrdb straight out of extract_mtrdb is a bug, not bad input.
    if (d.severity == Severity::Error) d.code = diag::InternalError;
    diags.add(d);
  }
  if (diags.has_errors()) {
    result.exit_code = 2;
    return result;
  }
  if (config.dump_mtrdb) result.dump_text += dump_mtrdb(mtrdb);

  CdmModel cdm = build_cdm(mtrdb, diags);
  if (diags.has_errors()) {
    result.exit_code = 1;
    return result;
  }
  if (config.dump_cdm) result.dump_text += dump_cdm(cdm);

  OntologyOptions owl_opts;
  owl_opts.attr_restrictions = config.attr_restrictions;
  owl_opts.emit_length = config.emit_length;
  owl_opts.owl2_keys = config.profile == Profile::Owl2;
  OwlDocument doc = build_ontology(cdm, config.base_iri, diags, owl_opts);
  if (diags.has_errors()) {
    result.exit_code = 1;
    return result;
  }

  if (config.data_kind != DataSourceKind::None) {
    std::vector<Recordset> recordsets;
    if (config.data_kind == DataSourceKind::CsvDir) {
      for (const auto& table : schema.tables) {
        fs::path csv = fs::path(config.data_path) / (table.name + ".csv");
        if (!fs::exists(csv)) continue;
        recordsets.push_back(load_csv(csv, table, diags));
      }
    } else {
      std::string insert_text;
      if (!read_file(config.data_path, insert_text, diags)) {
        result.exit_code = 1;
        return result;
      }
      recordsets = parse_inserts(insert_text, schema, diags, config.data_path);
    }
    if (diags.has_errors()) {
      result.exit_code = 1;
      return result;
    }
    ConvertOptions convert_opts;
    convert_opts.strict_ri = config.strict_ri;
    convert_recordsets(recordsets, cdm, doc, diags, convert_opts);
    if (diags.has_errors()) {
      result.exit_code = 1;
      return result;
    }
  }

  if (!config.output_path.empty()) {
    auto serialize = [&](const OwlDocument& d) {
      return config.format == OutputFormat::RdfXml ? serialize_rdfxml(d, diags)
                                                   : serialize_turtle(d, diags);
    };
    if (config.split_data) {
      OwlDocument schema_doc = doc;
      schema_doc.individuals.clear();
      schema_doc.orphan_assertions.clear();
      OwlDocument data_doc = make_document(doc.base_iri);
      data_doc.individuals = doc.individuals;
      data_doc.orphan_assertions = doc.orphan_assertions;
      std::string schema_text = serialize(schema_doc);
      std::string data_text = serialize(data_doc);
      if (diags.has_errors()) {
        result.exit_code = exit_code_for(diags);
        return result;
      }
      fs::path data_path = data_output_path(config.output_path);
      if (write_file(config.output_path, schema_text, diags))
        result.outputs_written.push_back(config.output_path);
      if (write_file(data_path, data_text, diags))
        result.outputs_written.push_back(data_path.string());
    } else {
      std::string text = serialize(doc);
      if (diags.has_errors()) {
        result.exit_code = exit_code_for(diags);
        return result;
      }
      if (write_file(config.output_path, text, diags))
        result.outputs_written.push_back(config.output_path);
    }
  }

  result.exit_code = exit_code_for(diags);
  return result;
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    return run_impl(config);
  } catch (const std::exception& e) {
    RunResult result;
    result.diags.error(diag::InternalError, Location{}, e.what());
    result.exit_code = 2;
    return result;
  }
}

}  // namespace rdb2owl
