#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/group.hpp"

namespace nsg {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::size_t degree;
  std::vector<std::string> generators;
  std::size_t expected_order;
  bool solvable;
};

/// Built-in groups, smallest first.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Where a group comes from: a catalog name or a generator file.
struct GroupSpec {
  enum class Source { catalog, file };
  Source source = Source::catalog;
  /// Catalog name or file path.
  std::string location;
  std::string name;
  std::optional<std::size_t> guard_override;
};

/// Catalog names win; anything else is taken as a generator-file path.
GroupSpec resolve_group_spec(const std::string& text, std::optional<std::size_t> guard = std::nullopt);

struct LoadedGroup {
  GroupSpec spec;
  GeneratorFile generators;
  FiniteGroup group;
};

/// Parses and enumerates. Catalog groups are checked against their stored
/// order; a mismatch raises InvariantViolation.
LoadedGroup load_group(const GroupSpec& spec);

}  // namespace nsg
