#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/surface.hpp"

namespace origami::cli {

struct CachedInvariants {
  std::vector<int> stratum;
  std::vector<int> genus;
  std::optional<std::size_t> veech_index;  // absent for disconnected surfaces

  friend bool operator==(const CachedInvariants&, const CachedInvariants&) = default;
};

struct CatalogEntry {
  std::string name;
  Surface surface;
  std::optional<CachedInvariants> cached;
};

CachedInvariants compute_invariants(const Surface& x);

// One JSON object per line. A missing file is an empty catalog.
// Throws ParseError on a malformed line.
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Throws std::invalid_argument if the name is already taken.
void append_entry(const std::string& path, const CatalogEntry& entry);

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& catalog,
                                       const std::string& name);

}  // namespace origami::cli
