#include "origami/closed_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace origami {

RingDiagram::RingDiagram(const Permutation& center, const Permutation& u) : center_(center) {
  if (center.degree() != u.degree()) {
    throw std::invalid_argument("ring diagram center and vertex have different degrees");
  }
  const auto k = center.order();
  vertices_.reserve(k);
  Permutation vertex = u;
  for (std::uint64_t m = 0; m < k; ++m) {
    vertices_.push_back(vertex);
    vertex = center * vertex;
  }
  const auto least = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), least, vertices_.end());
}

RingDiagram relabel(const RingDiagram& b, const Permutation& w) {
  return RingDiagram(relabel(b.center(), w), relabel(b.vertices().front(), w));
}

ClosedSystem closure(const RingDiagram& seed) {
  ClosedSystem out;
  std::vector<const RingDiagram*> frontier;
  frontier.push_back(&*out.diagrams.insert(seed).first);
  out.level_sizes.push_back(1);
  while (!frontier.empty()) {
    std::vector<const RingDiagram*> next;
    for (const RingDiagram* b : frontier) {
      const auto& v = b->vertices();
      for (std::size_t m = 0; m < v.size(); ++m) {
        // v[m + 1] = a v[m]; the last vertex wraps around to the first.
        const Permutation& higher = v[(m + 1) % v.size()];
        auto [it, fresh] = out.diagrams.emplace(higher, v[m]);
        if (fresh) next.push_back(&*it);
      }
    }
    if (!next.empty()) out.level_sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return out;
}

ClosedSystem closed_system(const Surface& x) {
  const Permutation& s = x.sigma();
  return closure(RingDiagram(s, s.inverse() * x.tau() * s));
}

ClosedSystem conjugate_system(const ClosedSystem& s, const Permutation& w) {
  ClosedSystem out;
  out.level_sizes = s.level_sizes;
  for (const auto& b : s.diagrams) out.diagrams.insert(relabel(b, w));
  return out;
}

bool systems_equal(const ClosedSystem& a, const ClosedSystem& b) {
  return a.diagrams == b.diagrams;
}

}  // namespace origami
