#ifndef RDB2OWL_DATA_LOADER_HPP
#define RDB2OWL_DATA_LOADER_HPP

#include <filesystem>
#include <string_view>
#include <vector>

#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/schema.hpp"

namespace rdb2owl {

// Loads one RFC-4180 CSV file (mandatory header row) into a Recordset for
// `table`. The header must be a permutation of the table's columns.
// NULL convention: unquoted empty cell = NULL, quoted empty string = "".
Recordset load_csv(const std::filesystem::path& path, const TableDef& table, Diagnostics& diags);

// Parses `INSERT INTO <table> (cols...) VALUES (...), ...;` statements into
// one Recordset per distinct table, rows in statement order. The column list
// may be omitted (all declared columns, in order); columns an INSERT leaves
// out become NULL cells. Headers use the table's declared column order.
std::vector<Recordset> parse_inserts(std::string_view text, const SchemaAst& schema,
                                     Diagnostics& diags, std::string_view filename = "");

}  // namespace rdb2owl

#endif
