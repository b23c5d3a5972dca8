#include "nsg/catalog.hpp"

#include <filesystem>

#include "nsg/errors.hpp"

namespace nsg {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"trivial", "trivial group", 1, {}, 1, true},
      {"C2", "cyclic group of order 2", 2, {"(1 2)"}, 2, true},
      {"C6", "cyclic group of order 6", 6, {"(1 2 3 4 5 6)"}, 6, true},
      {"S3", "symmetric group on 3 points", 3, {"(1 2 3)", "(1 2)"}, 6, true},
      {"Q8", "quaternion group, regular action", 8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}, 8, true},
      {"D10", "dihedral group of order 10", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}, 10, true},
      {"A4", "alternating group on 4 points", 4, {"(1 2 3)", "(1 2)(3 4)"}, 12, true},
      {"S4", "symmetric group on 4 points", 4, {"(1 2 3 4)", "(1 2)"}, 24, true},
      {"A5", "alternating group on 5 points", 5, {"(1 2 3 4 5)", "(1 2 3)"}, 60, false},
      {"S5", "symmetric group on 5 points", 5, {"(1 2 3 4 5)", "(1 2)"}, 120, false},
      {"SL25",
       "SL(2,5) acting on the 24 nonzero vectors of GF(5)^2",
       24,
       {"(5 6 7 8 9)(10 12 14 11 13)(15 18 16 19 17)(20 24 23 22 21)",
        "(1 5 4 20)(2 10 3 15)(6 9 24 21)(7 14 23 16)(8 19 22 11)(12 13 18 17)"},
       120,
       false},
      {"A5xC2", "A5 x C2 on 5 + 2 points", 7, {"(1 2 3 4 5)", "(1 2 3)", "(6 7)"}, 120, false},
      {"PSL27", "PSL(2,7) acting on the projective line over GF(7)", 8,
       {"(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"}, 168, false},
  };
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

GroupSpec resolve_group_spec(const std::string& text, std::optional<std::size_t> guard) {
  GroupSpec spec;
  spec.location = text;
  spec.guard_override = guard;
  if (find_catalog_entry(text)) {
    spec.source = GroupSpec::Source::catalog;
    spec.name = text;
  } else {
    spec.source = GroupSpec::Source::file;
    spec.name = std::filesystem::path(text).stem().string();
  }
  return spec;
}

LoadedGroup load_group(const GroupSpec& spec) {
  GroupOptions options;
  if (spec.guard_override) options.order_guard = *spec.guard_override;

  GeneratorFile file;
  const CatalogEntry* entry = nullptr;
  if (spec.source == GroupSpec::Source::catalog) {
    entry = find_catalog_entry(spec.location);
    if (!entry) throw ParseError("unknown catalog group '" + spec.location + "'");
    file.degree = entry->degree;
    for (const auto& s : entry->generators) file.generators.push_back(parse_permutation(s, entry->degree));
  } else {
    if (!std::filesystem::exists(spec.location)) {
      throw ParseError("'" + spec.location + "' is neither a catalog group nor an existing generator file");
    }
    file = read_generator_file(spec.location);
  }

  FiniteGroup g = FiniteGroup::generate(file.generators, file.degree, options);
  if (entry && g.order() != entry->expected_order) {
    throw InvariantViolation("catalog group " + entry->name + " has order " + std::to_string(g.order()) +
                             ", expected " + std::to_string(entry->expected_order));
  }
  return LoadedGroup{spec, std::move(file), std::move(g)};
}

}  // namespace nsg
