#include "origami/orbit.hpp"

#include <deque>
#include <unordered_set>

#include "origami/codes.hpp"
#include "origami/error.hpp"

namespace origami {

namespace {

void require_connected(const Surface& x) {
  if (!is_connected(x)) {
    throw Refused("surface " + x.to_string() + " is not connected");
  }
}

}  // namespace

Surface act(const Surface& x, Letter g) {
  const Permutation& s = x.sigma();
  const Permutation& t = x.tau();
  switch (g) {
    case Letter::L_inv: return Surface(s, t * s);
    case Letter::L: return Surface(s, t * s.inverse());
    case Letter::R_inv: return Surface(s * t, t);
    case Letter::R: return Surface(s * t.inverse(), t);
  }
  return x;
}

Surface act_inverse(const Surface& x, std::span<const Letter> word) {
  Surface y = x;
  for (Letter g : word) y = act(y, inverse(g));
  return y;
}

std::vector<OrbitState> s_plus(const Surface& x) {
  require_connected(x);
  const PosMatrix identity;
  PermPair start = code_left_matrix(x, identity);

  std::vector<OrbitState> states;
  std::unordered_set<PermPair, PermPairHash> seen;
  seen.insert(canonical_pair(start.first, start.second));
  states.push_back({canonical_pair(start.first, start.second), start, identity});

  const PosMatrix l(IntMatrix::L()), r(IntMatrix::R());
  for (std::size_t head = 0; head < states.size(); ++head) {
    const auto [w1, w2] = states[head].code_pair;
    const PosMatrix a = states[head].representative_matrix;
    const std::pair<PermPair, PosMatrix> children[] = {
        {{w1, w1 * w2}, a * l},
        {{w1 * w2, w2}, a * r},
    };
    for (const auto& [pair, m] : children) {
      PermPair key = canonical_pair(pair.first, pair.second);
      if (seen.insert(key).second) states.push_back({std::move(key), pair, m});
    }
  }
  return states;
}

std::set<PermPair> orbit_bfs_oracle(const Surface& x) {
  require_connected(x);
  std::set<PermPair> seen;
  std::deque<PermPair> queue;
  auto visit = [&](const Permutation& s, const Permutation& t) {
    PermPair key = canonical_pair(s, t);
    if (seen.insert(key).second) queue.push_back(std::move(key));
  };
  visit(x.sigma(), x.tau());
  while (!queue.empty()) {
    const auto [s, t] = queue.front();
    queue.pop_front();
    visit(s, t * s);
    visit(s, t * s.inverse());
    visit(t, s.inverse());
  }
  return seen;
}

std::size_t veech_index(const Surface& x) { return s_plus(x).size(); }

}  // namespace origami
