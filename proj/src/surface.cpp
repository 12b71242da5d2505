#include "origami/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "origami/error.hpp"

namespace origami {

Surface::Surface(Permutation sigma, Permutation tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.degree() != tau_.degree()) {
    throw std::invalid_argument("sigma and tau have different degrees (" +
                                std::to_string(sigma_.degree()) + " vs " +
                                std::to_string(tau_.degree()) + ")");
  }
  if (sigma_.degree() == 0) throw std::invalid_argument("a surface needs at least one square");
}

namespace {

std::size_t max_label(std::string_view text) {
  std::size_t best = 0, value = 0;
  bool in_number = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      in_number = true;
      if (value > 1'000'000) return value;
    } else {
      if (in_number) best = std::max(best, value);
      value = 0;
      in_number = false;
    }
  }
  if (in_number) best = std::max(best, value);
  return best;
}

Surface parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    auto sigma_cycles = j.at("sigma").get<std::vector<std::vector<int>>>();
    auto tau_cycles = j.at("tau").get<std::vector<std::vector<int>>>();
    return Surface(Permutation::from_cycles(std::span<const std::vector<int>>(sigma_cycles), n),
                   Permutation::from_cycles(std::span<const std::vector<int>>(tau_cycles), n));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad surface JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string("bad surface JSON: ") + e.what(), 0);
  }
}

}  // namespace

Surface Surface::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'sigma;tau'", text.size());
  if (text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("more than one ';'", text.find(';', semi + 1));
  }
  const std::size_t n = std::max<std::size_t>(1, max_label(text));
  auto parse_side = [&](std::string_view side, std::size_t offset) {
    try {
      return Permutation::parse(side, n);
    } catch (const ParseError& e) {
      std::string what = e.what();
      what = what.substr(0, what.rfind(" (at position"));
      throw ParseError(what, offset + e.position());
    }
  };
  return Surface(parse_side(text.substr(0, semi), 0),
                 parse_side(text.substr(semi + 1), semi + 1));
}

std::string Surface::to_string() const { return sigma_.to_string() + ";" + tau_.to_string(); }

bool is_connected(const Surface& x) { return is_transitive(x.sigma(), x.tau()); }

Permutation commutator(const Surface& x) {
  return x.sigma().inverse() * x.tau().inverse() * x.sigma() * x.tau();
}

ConeData cone_data(const Surface& x) {
  ConeData out;
  out.theta = commutator(x);
  for (auto& cycle : out.theta.cycles(false)) {
    const int angle = static_cast<int>(cycle.size());
    out.stratum.push_back(angle - 1);
    out.cone_points.push_back({std::move(cycle), angle});
  }
  std::sort(out.stratum.rbegin(), out.stratum.rend());

  for (const auto& component : orbits(x.sigma(), x.tau())) {
    int excess = 0;
    for (const auto& cp : out.cone_points) {
      // Theta is a word in sigma and tau, so each cycle lies in one component.
      if (std::binary_search(component.begin(), component.end(), cp.cycle.front() - 1)) {
        excess += cp.angle - 1;
      }
    }
    out.genus.push_back(excess / 2 + 1);
  }
  return out;
}

Surface rotate90(const Surface& x) { return Surface(x.tau(), x.sigma().inverse()); }

bool is_equivalent(const Surface& x, const Surface& y) {
  if (x.degree() != y.degree()) return false;
  return simultaneous_conjugator(x.sigma(), x.tau(), y.sigma(), y.tau()).has_value();
}

std::pair<PosMatrix, PosMatrix> dehn_twist_matrices(const Surface& x) {
  const auto h = static_cast<std::int64_t>(x.sigma().order());
  const auto v = static_cast<std::int64_t>(x.tau().order());
  return {PosMatrix(IntMatrix::from_rows(1, h, 0, 1)), PosMatrix(IntMatrix::from_rows(1, 0, v, 1))};
}

}  // namespace origami
