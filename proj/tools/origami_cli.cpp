#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "origami/closed_system.hpp"
#include "origami/codes.hpp"
#include "origami/error.hpp"
#include "origami/orbit.hpp"
#include "origami/surface.hpp"
#include "origami/text_io.hpp"
#include "origami/veech.hpp"

namespace {

using namespace origami;
using nlohmann::json;

enum Exit { ok = 0, usage = 1, refused = 2, breach = 3 };

struct Options {
  std::string surface;
  bool json = false;
  std::string catalog = "origami-catalog.jsonl";
  std::size_t max_n = default_exhaustive_bound;
  bool audit_degenerate = false;
  bool verify = false;
};

Surface resolve_surface(const Options& o) {
  if (o.surface.empty()) throw std::invalid_argument("--surface is required for this command");
  if (o.surface.find(';') != std::string::npos || o.surface.find('{') != std::string::npos) {
    return Surface::parse(o.surface);
  }
  if (auto e = cli::find_entry(cli::load_catalog(o.catalog), o.surface)) return e->surface;
  throw ParseError("'" + o.surface + "' is neither 'sigma;tau' nor a catalog name", 0);
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text;
  }
}

std::string pair_string(const PermPair& p) {
  return "(" + p.first.to_string() + ", " + p.second.to_string() + ")";
}

int cmd_info(const Options& o) {
  const Surface x = resolve_surface(o);
  const auto cone = cone_data(x);
  const auto [h, v] = dehn_twist_matrices(x);
  json j = to_json(cone);
  j["surface"] = x.to_string();
  j["n"] = x.degree();
  j["connected"] = is_connected(x);
  j["horizontal_twist"] = h.to_string();
  j["vertical_twist"] = v.to_string();

  std::string t = "surface    " + x.to_string() + "\n";
  t += "squares    " + std::to_string(x.degree()) + "\n";
  t += std::string("connected  ") + (is_connected(x) ? "yes" : "no") + "\n";
  t += "theta      " + cone.theta.to_string() + "\n";
  t += "stratum    " + stratum_string(cone.stratum) + "\n";
  t += "genus      " + list_string(cone.genus) + "\n";
  for (const auto& p : cone.cone_points) {
    t += "cone point " + list_string(p.cycle) + " angle " + std::to_string(p.angle) + "*2pi\n";
  }
  t += "twists     H=" + h.to_string() + " V=" + v.to_string() + "\n";
  emit(o, j, t);
  return ok;
}

int cmd_cut(const Options& o, const std::string& slope_text) {
  const Slope r = Slope::parse(slope_text);
  const Word w = cut(r);
  json j{{"slope", r.to_string()}, {"cut", to_string(w)}};
  std::string t = "cut(" + r.to_string() + ") = " + to_string(w) + "\n";
  if (o.audit_degenerate) {
    const Word s = cut(r, DegenerateConvention::swapped);
    j["cut_swapped"] = to_string(s);
    t += "swapped convention: " + to_string(s) + "\n";
  }
  emit(o, j, t);
  return ok;
}

int cmd_code(const Options& o, const std::string& slope_text) {
  const Surface x = resolve_surface(o);
  const Slope r = Slope::parse(slope_text);
  const auto c = code(x, r), cl = code_left(x, r), cr = code_right(x, r);
  const auto cyl = cylinders(x, r);
  json j{{"slope", r.to_string()},
         {"code", c.to_string()},
         {"code_left", cl.to_string()},
         {"code_right", cr.to_string()},
         {"cylinders", to_json(cyl)["cylinders"]}};
  std::string t = "Code   " + c.to_string() + "\nCode^L " + cl.to_string() + "\nCode^R " +
                  cr.to_string() + "\ncylinders";
  for (const auto& cy : cyl.cylinders) t += " " + list_string(cy.cycle) + ":" + std::to_string(cy.area);
  t += "\n";
  if (o.audit_degenerate) {
    const auto s = code(x, r, DegenerateConvention::swapped);
    j["code_swapped"] = s.to_string();
    t += "Code (swapped convention) " + s.to_string() + "\n";
  }
  emit(o, j, t);
  return ok;
}

int cmd_matrix_code(const Options& o, const std::string& matrix_text) {
  const Surface x = resolve_surface(o);
  const PosMatrix m(IntMatrix::parse(matrix_text));
  const auto pair = code_left_matrix(x, m);
  json j{{"matrix", m.to_string()},
         {"first", pair.first.to_string()},
         {"second", pair.second.to_string()}};
  emit(o, j, "Code^L(" + m.to_string() + ") = " + pair_string(pair) + "\n");
  return ok;
}

int cmd_closed_system(const Options& o) {
  const Surface x = resolve_surface(o);
  const auto sys = closed_system(x);
  std::string t = std::to_string(sys.diagrams.size()) + " ring diagrams\n";
  for (const auto& b : sys.diagrams) {
    t += "B " + b.center().to_string() + " :";
    for (const auto& v : b.vertices()) t += " " + v.to_string();
    t += "\n";
  }
  emit(o, to_json(sys), t);
  return ok;
}

int cmd_veech(const Options& o, const std::string& matrix_text) {
  const Surface x = resolve_surface(o);
  const IntMatrix m = IntMatrix::parse(matrix_text);
  if (m.det() != 1) throw std::invalid_argument("matrix " + m.to_string() + " has determinant " + std::to_string(m.det()));
  std::optional<Permutation> witness;
  bool member = false;
  if (m.is_nonnegative()) {
    witness = veech_contains_positive(x, PosMatrix(m));
    member = witness.has_value();
    if (member != veech_contains(x, m)) {
      throw InvariantBreach("code conjugacy and the surface action disagree on " + m.to_string());
    }
  } else {
    member = veech_contains(x, m);
  }
  std::string t = m.to_string() + (member ? " is in the Veech group" : " is not in the Veech group");
  if (witness) t += ", witness " + witness->to_string();
  emit(o, veech_verdict_json(m, member, witness), t + "\n");
  return ok;
}

int cmd_orbit(const Options& o) {
  const Surface x = resolve_surface(o);
  const auto states = s_plus(x);
  json rows = json::array();
  std::string t;
  for (const auto& s : states) {
    rows.push_back(to_json(s));
    const Surface y(s.surface_class.first, s.surface_class.second);
    t += y.to_string() + "  " + s.representative_matrix.to_string() + "  " +
         stratum_string(cone_data(y).stratum) + "\n";
  }
  t += "index " + std::to_string(states.size()) + "\n";
  emit(o, {{"states", rows}, {"index", states.size()}}, t);
  return ok;
}

int cmd_scc(const Options& o, const std::string& slope_text, int label) {
  const Surface x = resolve_surface(o);
  const Slope r = Slope::parse(slope_text);
  const bool here = is_scc_at(x, r, label);
  json j{{"slope", r.to_string()}, {"label", label}, {"scc", here}};
  std::string t = r.to_string() + (here ? " is" : " is not") + " an scc at " + std::to_string(label) + "\n";
  if (!r.is_degenerate() && r.p <= r.q) {
    const CFrac prefix = cfrac(r);
    const auto prog = scc_progression(x, prefix, label);
    if (prog) {
      j["progression"] = {{"first", prog->first}, {"period", prog->period}};
      t += prefix.to_string() + " ++ [i] is an scc at " + std::to_string(label) + " for i = " +
           std::to_string(prog->first) + " + " + std::to_string(prog->period) + "t\n";
    } else {
      j["progression"] = nullptr;
      t += prefix.to_string() + " ++ [i] is never an scc at " + std::to_string(label) + "\n";
    }
  }
  emit(o, j, t);
  return ok;
}

int cmd_oracle(const Options& o, int max_sum) {
  const Surface x = resolve_surface(o);
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  for (std::int64_t total = 1; total <= max_sum; ++total) {
    for (std::int64_t p = 0; p <= total; ++p) {
      const std::int64_t q = total - p;
      if (std::gcd(p, q) != 1) continue;
      const Slope r{p, q};
      const auto tr = trace_oracle(x, r);
      ++checked;
      if (tr.code != code(x, r) || tr.left != code_left(x, r) || tr.right != code_right(x, r)) {
        mismatches.push_back(r.to_string());
      }
    }
  }
  json j{{"slopes_checked", checked}, {"code_mismatches", mismatches}};
  std::string t = "trace oracle: " + std::to_string(checked) + " slopes, " +
                  std::to_string(mismatches.size()) + " mismatches\n";
  bool orbit_ok = true;
  if (is_connected(x)) {
    const auto a = s_plus(x).size(), b = orbit_bfs_oracle(x).size();
    orbit_ok = a == b;
    j["s_plus"] = a;
    j["orbit_bfs"] = b;
    t += "orbit: s_plus " + std::to_string(a) + ", orbit oracle " + std::to_string(b) + "\n";
  }
  emit(o, j, t);
  if (!mismatches.empty() || !orbit_ok) {
    std::cerr << "error: oracle disagreement\n";
    return breach;
  }
  return ok;
}

int cmd_group(const Options& o) {
  const Surface x = resolve_surface(o);
  const CodeGroup g(x);
  const auto s = g.stabilizer(o.max_n);
  const auto gx = g.code_group(o.max_n);
  const auto elements = g.elements();
  json j{{"S_X", s.size()}, {"G_X", gx.size()}, {"code_pairs", elements.size()}};
  std::string t = "|S_X| = " + std::to_string(s.size()) + "\n|G_X| = " + std::to_string(gx.size()) +
                  "\nrealized pairs conjugate to Code^L(I): " + std::to_string(elements.size()) + "\n";
  emit(o, j, t);
  return ok;
}

int cmd_catalog_add(const Options& o, const std::string& name) {
  if (o.surface.empty()) throw std::invalid_argument("--surface is required");
  const Surface x = Surface::parse(o.surface);
  cli::append_entry(o.catalog, {name, x, cli::compute_invariants(x)});
  emit(o, {{"added", name}}, "added " + name + "\n");
  return ok;
}

int cmd_catalog_list(const Options& o) {
  const auto entries = cli::load_catalog(o.catalog);
  json rows = json::array();
  std::string t;
  bool stale = false;
  for (const auto& e : entries) {
    json row{{"name", e.name}, {"surface", e.surface.to_string()}};
    t += e.name + "  " + e.surface.to_string();
    if (e.cached) {
      row["stratum"] = e.cached->stratum;
      t += "  " + stratum_string(e.cached->stratum);
      if (e.cached->veech_index) {
        row["veech_index"] = *e.cached->veech_index;
        t += "  index " + std::to_string(*e.cached->veech_index);
      }
    }
    if (o.verify) {
      const bool good = e.cached && *e.cached == cli::compute_invariants(e.surface);
      row["verified"] = good;
      t += good ? "  verified" : "  STALE";
      stale = stale || !good;
    }
    t += "\n";
    rows.push_back(row);
  }
  emit(o, rows, t);
  if (stale) {
    std::cerr << "error: cached invariants differ from recomputation\n";
    return breach;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes, closed systems and Veech groups of square-tiled surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--surface", o.surface, "\"sigma;tau\" in cycle notation, JSON, or a catalog name");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--catalog", o.catalog, "catalog file (line-delimited JSON)");
  app.add_option("--max-n", o.max_n, "largest degree for exhaustive S_n scans");
  app.add_flag("--audit-degenerate", o.audit_degenerate,
               "also print values under the swapped convention for 0/1 and 1/0");
  app.add_flag("--verify", o.verify, "recompute cached catalog invariants");

  std::string slope, matrix, name;
  int label = 1;
  int max_sum = 12;
  std::function<int()> run;

  app.add_subcommand("info", "stratum, genus, cone points, twist matrices")->callback([&] {
    run = [&] { return cmd_info(o); };
  });
  auto* c_cut = app.add_subcommand("cut", "cutting sequence of a slope");
  c_cut->add_option("slope", slope, "p/q or inf")->required();
  c_cut->callback([&] { run = [&] { return cmd_cut(o, slope); }; });
  auto* c_code = app.add_subcommand("code", "code, left and right codes, cylinders");
  c_code->add_option("slope", slope)->required();
  c_code->callback([&] { run = [&] { return cmd_code(o, slope); }; });
  auto* c_mc = app.add_subcommand("matrix-code", "left-code pair of a matrix in SL2+(Z)");
  c_mc->add_option("matrix", matrix, "\"a,c;b,d\"")->required();
  c_mc->callback([&] { run = [&] { return cmd_matrix_code(o, matrix); }; });
  app.add_subcommand("closed-system", "ring diagrams of the closed system")->callback([&] {
    run = [&] { return cmd_closed_system(o); };
  });
  auto* c_veech = app.add_subcommand("veech", "Veech group membership");
  c_veech->add_option("matrix", matrix, "\"a,c;b,d\"")->required();
  c_veech->callback([&] { run = [&] { return cmd_veech(o, matrix); }; });
  app.add_subcommand("orbit", "S+ states and the Veech index")->callback([&] {
    run = [&] { return cmd_orbit(o); };
  });
  auto* c_scc = app.add_subcommand("scc", "single-cylinder checks at a square");
  c_scc->add_option("slope", slope)->required();
  c_scc->add_option("label", label, "square label, 1-based")->required();
  c_scc->callback([&] { run = [&] { return cmd_scc(o, slope, label); }; });
  auto* c_oracle = app.add_subcommand("oracle", "compare algebraic codes and orbits with oracles");
  c_oracle->add_option("--max-sum", max_sum, "slopes with p+q up to this");
  c_oracle->callback([&] { run = [&] { return cmd_oracle(o, max_sum); }; });
  app.add_subcommand("group", "orders of S_X and G_X")->callback([&] {
    run = [&] { return cmd_group(o); };
  });
  auto* c_cat = app.add_subcommand("catalog", "manage the surface catalog");
  c_cat->require_subcommand(1);
  auto* c_add = c_cat->add_subcommand("add", "add --surface under a name");
  c_add->add_option("name", name)->required();
  c_add->callback([&] { run = [&] { return cmd_catalog_add(o, name); }; });
  c_cat->add_subcommand("list", "list entries")->callback([&] {
    run = [&] { return cmd_catalog_list(o); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    return run();
  } catch (const Refused& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return refused;
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return breach;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
