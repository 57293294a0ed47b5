#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alg3/catalog.hpp"
#include "alg3/table.hpp"

namespace alg3 {

/// Parses a table document (JSON, format 1). Throws ParseError with a
/// location hint on malformed input.
StructureTable parse_table_document(const std::string& text);

/// Serializes a table to the document format, bit-stable across runs.
std::string serialize_table_document(const StructureTable& t,
                                     const std::vector<std::string>& basis_names = {});

/// Catalog export: every entry for the mode (all dimensions, family samples
/// included), as one versioned JSON document.
std::string serialize_catalog(FieldMode mode, std::optional<int> dim_filter = std::nullopt);

/// Tables contained in a text: one for a table document, one per entry for a
/// catalog export. Tags identify entries in multi-table reports.
std::vector<std::pair<std::string, StructureTable>> extract_documents(const std::string& text);

}  // namespace alg3
