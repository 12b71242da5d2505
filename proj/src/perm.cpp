#include "origami/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "origami/error.hpp"

namespace origami {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q, const char* what) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::span<const std::vector<int>> cycles, std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int label = cycle[k];
      if (label < 1 || static_cast<std::size_t>(label) > n) {
        throw std::invalid_argument("cycle label " + std::to_string(label) + " outside 1.." +
                                    std::to_string(n));
      }
      if (used[label - 1]) {
        throw std::invalid_argument("label " + std::to_string(label) + " repeated");
      }
      used[label - 1] = true;
      images[label - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::initializer_list<std::vector<int>> cycles,
                                     std::size_t n) {
  std::vector<std::vector<int>> v(cycles);
  return from_cycles(std::span<const std::vector<int>>(v), n);
}

Permutation Permutation::parse(std::string_view text, std::optional<std::size_t> n) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters after 'id'", pos);
    return identity(n.value_or(1));
  }

  std::vector<std::vector<int>> cycles;
  std::vector<std::size_t> label_pos;
  std::vector<std::size_t> seen_at;  // indexed by label
  int max_label = 0;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("label too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a label", pos);
      if (value < 1) throw ParseError("labels start at 1", start);
      int label = static_cast<int>(value);
      if (static_cast<std::size_t>(label) >= seen_at.size()) seen_at.resize(label + 1, 0);
      if (seen_at[label] != 0) throw ParseError("label " + std::to_string(label) + " repeated", start);
      seen_at[label] = start + 1;
      if (n && static_cast<std::size_t>(label) > *n) {
        throw ParseError("label " + std::to_string(label) + " exceeds degree " + std::to_string(*n),
                         start);
      }
      max_label = std::max(max_label, label);
      cycle.push_back(label);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) throw ParseError("empty permutation text", pos);
  std::size_t degree = n.value_or(static_cast<std::size_t>(max_label));
  return from_cycles(std::span<const std::vector<int>>(cycles), degree);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::int64_t k) const {
  const std::size_t n = images_.size();
  std::vector<int> out(n);
  std::vector<bool> done(n, false);
  std::vector<int> cycle;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    cycle.clear();
    for (int x = static_cast<int>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    const auto len = static_cast<std::int64_t>(cycle.size());
    const std::int64_t shift = ((k % len) + len) % len;
    for (std::int64_t j = 0; j < len; ++j) out[cycle[j]] = cycle[(j + shift) % len];
  }
  return Permutation(std::move(out));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles(false)) result = std::lcm(result, c.size());
  return result;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x + 1);
    }
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles(false);
  if (cs.empty()) return "id";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<int> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q[p[i]];
  return Permutation::from_images(std::move(out));
}

Permutation relabel(const Permutation& p, const Permutation& w) {
  require_same_degree(p, w, "relabel");
  std::vector<int> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[w[i]] = w[p[i]];
  return Permutation::from_images(std::move(out));
}

PermPair relabel(const PermPair& pair, const Permutation& w) {
  return {relabel(pair.first, w), relabel(pair.second, w)};
}

std::vector<std::vector<int>> orbits(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "orbits");
  const std::size_t n = a.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit{static_cast<int>(s)};
    seen[s] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int next : {a[orbit[head]], b[orbit[head]]}) {
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const Permutation& a, const Permutation& b) {
  return orbits(a, b).size() <= 1;
}

namespace {

// Extends w(x0) = y0 along a1/b1 and a2/b2 edges over the orbit of x0.
// Returns false on any clash. `w` and `taken` are updated only on success.
bool propagate(const Permutation& a1, const Permutation& a2, const Permutation& b1,
               const Permutation& b2, int x0, int y0, std::vector<int>& w,
               std::vector<bool>& taken) {
  std::vector<int> local = w;
  std::vector<bool> local_taken = taken;
  if (local[x0] != -1 || local_taken[y0]) return false;
  local[x0] = y0;
  local_taken[y0] = true;
  std::vector<int> queue{x0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    const int y = local[x];
    const std::pair<int, int> edges[] = {{a1[x], b1[y]}, {a2[x], b2[y]}};
    for (auto [xn, yn] : edges) {
      if (local[xn] == -1) {
        if (local_taken[yn]) return false;
        local[xn] = yn;
        local_taken[yn] = true;
        queue.push_back(xn);
      } else if (local[xn] != yn) {
        return false;
      }
    }
  }
  w = std::move(local);
  taken = std::move(local_taken);
  return true;
}

}  // namespace

std::optional<Permutation> simultaneous_conjugator(const Permutation& a1, const Permutation& a2,
                                                   const Permutation& b1, const Permutation& b2) {
  require_same_degree(a1, a2, "simultaneous_conjugator");
  require_same_degree(a1, b1, "simultaneous_conjugator");
  require_same_degree(a1, b2, "simultaneous_conjugator");
  const std::size_t n = a1.degree();
  if (a1 == b1 && a2 == b2) return Permutation::identity(n);

  const auto source = orbits(a1, a2);
  const auto target = orbits(b1, b2);
  if (source.size() != target.size()) return std::nullopt;

  // Orbits are matched greedily: "some orbit of (a1,a2) is conjugate to some
  // orbit of (b1,b2)" is an equivalence relation, so a first fit never has
  // to be undone.
  std::vector<int> w(n, -1);
  std::vector<bool> taken(n, false);
  std::vector<bool> used(target.size(), false);
  for (const auto& orbit : source) {
    const int anchor = orbit.front();
    bool matched = false;
    for (std::size_t t = 0; t < target.size() && !matched; ++t) {
      if (used[t] || target[t].size() != orbit.size()) continue;
      for (int y0 : target[t]) {
        if (propagate(a1, a2, b1, b2, anchor, y0, w, taken)) {
          used[t] = true;
          matched = true;
          break;
        }
      }
    }
    if (!matched) return std::nullopt;
  }
  return Permutation::from_images(std::move(w));
}

namespace {

struct ComponentForm {
  std::vector<int> first;   // relabeled images, local 0-based
  std::vector<int> second;
  std::vector<int> points;  // points[k] = original point given local label k
};

ComponentForm canonical_component(const Permutation& a, const Permutation& b,
                                  const std::vector<int>& orbit) {
  const std::size_t m = orbit.size();
  std::vector<int> local(a.degree(), -1);
  std::optional<ComponentForm> best;
  for (int anchor : orbit) {
    for (int x : orbit) local[x] = -1;
    ComponentForm cand;
    cand.points.reserve(m);
    cand.points.push_back(anchor);
    local[anchor] = 0;
    for (std::size_t head = 0; head < cand.points.size(); ++head) {
      const int x = cand.points[head];
      for (int next : {a[x], b[x]}) {
        if (local[next] == -1) {
          local[next] = static_cast<int>(cand.points.size());
          cand.points.push_back(next);
        }
      }
    }
    cand.first.resize(m);
    cand.second.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      cand.first[k] = local[a[cand.points[k]]];
      cand.second[k] = local[b[cand.points[k]]];
    }
    if (!best || std::tie(cand.first, cand.second) < std::tie(best->first, best->second)) {
      best = std::move(cand);
    }
  }
  return std::move(*best);
}

}  // namespace

CanonicalForm canonical_form(const Permutation& a1, const Permutation& a2) {
  require_same_degree(a1, a2, "canonical_pair");
  const std::size_t n = a1.degree();
  std::vector<ComponentForm> parts;
  for (const auto& orbit : orbits(a1, a2)) parts.push_back(canonical_component(a1, a2, orbit));
  std::sort(parts.begin(), parts.end(), [](const ComponentForm& x, const ComponentForm& y) {
    if (x.points.size() != y.points.size()) return x.points.size() < y.points.size();
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });

  std::vector<int> labeling(n), first(n), second(n);
  int offset = 0;
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < part.points.size(); ++k) {
      labeling[part.points[k]] = offset + static_cast<int>(k);
      first[offset + k] = offset + part.first[k];
      second[offset + k] = offset + part.second[k];
    }
    offset += static_cast<int>(part.points.size());
  }
  return {{Permutation::from_images(std::move(first)), Permutation::from_images(std::move(second))},
          Permutation::from_images(std::move(labeling))};
}

PermPair canonical_pair(const Permutation& a1, const Permutation& a2) {
  return canonical_form(a1, a2).pair;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull ^ p.degree();
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t PermPairHash::operator()(const PermPair& p) const noexcept {
  PermutationHash h;
  std::size_t a = h(p.first);
  return a ^ (h(p.second) + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace origami
