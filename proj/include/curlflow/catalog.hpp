#pragma once

#include "curlflow/parser.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace curlflow {

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string source; // system-definition file text
};

/// Built-in systems, sorted by name.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry* find_catalog_entry(std::string_view name);

/// Every entry parsed with its default parameter bindings.
std::vector<SystemDef> catalog();

} // namespace curlflow
