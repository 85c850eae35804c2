#ifndef RDB2OWL_DDL_PARSER_HPP
#define RDB2OWL_DDL_PARSER_HPP

#include <string_view>

#include "rdb2owl/diagnostics.hpp"
#include "rdb2owl/schema.hpp"

namespace rdb2owl {

// Parses a DDL dump (a sequence of CREATE TABLE statements) into a SchemaAst.
// Non-CREATE statements are skipped with a note. On error the first failing
// diagnostic is recorded and the partial schema parsed so far is returned;
// callers must check diags.has_errors().
//
// Inline column-level PRIMARY KEY / UNIQUE / REFERENCES clauses are folded
// into the table-level lists. Foreign keys may reference tables defined later
// in the file; they are resolved in extract_mtrdb.
SchemaAst parse_ddl(std::string_view text, Diagnostics& diags, std::string_view filename = "");

}  // namespace rdb2owl

#endif
