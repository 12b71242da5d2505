#include "catalog.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "origami/error.hpp"
#include "origami/orbit.hpp"

namespace origami::cli {

using nlohmann::json;

CachedInvariants compute_invariants(const Surface& x) {
  const auto cone = cone_data(x);
  CachedInvariants c{cone.stratum, cone.genus, std::nullopt};
  if (is_connected(x)) c.veech_index = veech_index(x);
  return c;
}

namespace {

json entry_json(const CatalogEntry& e) {
  json j{{"name", e.name},
         {"n", e.surface.degree()},
         {"sigma", e.surface.sigma().cycles()},
         {"tau", e.surface.tau().cycles()}};
  if (e.cached) {
    json c{{"stratum", e.cached->stratum}, {"genus", e.cached->genus}};
    c["veech_index"] = e.cached->veech_index ? json(*e.cached->veech_index) : json(nullptr);
    j["cached"] = c;
  }
  return j;
}

CatalogEntry entry_from_line(const std::string& line, std::size_t lineno) {
  try {
    const json j = json::parse(line);
    CatalogEntry e{j.at("name").get<std::string>(), Surface::parse(line), std::nullopt};
    if (j.contains("cached")) {
      const auto& c = j.at("cached");
      CachedInvariants ci{c.at("stratum").get<std::vector<int>>(),
                          c.at("genus").get<std::vector<int>>(), std::nullopt};
      if (c.contains("veech_index") && !c.at("veech_index").is_null()) {
        ci.veech_index = c.at("veech_index").get<std::size_t>();
      }
      e.cached = ci;
    }
    return e;
  } catch (const std::exception& ex) {
    throw ParseError("catalog line " + std::to_string(lineno) + ": " + ex.what(), 0);
  }
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::vector<CatalogEntry> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(entry_from_line(line, lineno));
  }
  return out;
}

void append_entry(const std::string& path, const CatalogEntry& entry) {
  if (find_entry(load_catalog(path), entry.name)) {
    throw std::invalid_argument("catalog already has an entry named '" + entry.name + "'");
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open catalog " + path + " for writing");
  out << entry_json(entry).dump() << '\n';
}

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& catalog,
                                       const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

}  // namespace origami::cli
