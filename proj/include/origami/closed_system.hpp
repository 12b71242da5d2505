#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

// B(v, u): center v and the vertex cycle u, v u, v^2 u, ... (products left to
// right), one vertex per power of v below its order. B(v, u) and B(v, v^k u)
// are the same diagram; the stored vertex list starts at the least vertex.
class RingDiagram {
 public:
  // Throws std::invalid_argument on a degree mismatch.
  RingDiagram(const Permutation& center, const Permutation& u);

  const Permutation& center() const noexcept { return center_; }
  const std::vector<Permutation>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const RingDiagram&, const RingDiagram&) = default;
  friend auto operator<=>(const RingDiagram&, const RingDiagram&) = default;

 private:
  Permutation center_;
  std::vector<Permutation> vertices_;
};

inline RingDiagram ring_diagram(const Permutation& v, const Permutation& u) {
  return RingDiagram(v, u);
}

// Every diagram of the system relabeled by w.
RingDiagram relabel(const RingDiagram& b, const Permutation& w);

struct ClosedSystem {
  std::set<RingDiagram> diagrams;
  // Number of new diagrams found at each expansion round, seed first.
  std::vector<std::size_t> level_sizes;

  bool contains(const RingDiagram& b) const { return diagrams.contains(b); }
};

// Least set containing `seed` and, with every member B(a, b), the diagrams
// B(a^{m+1} b, a^m b) spanned by its adjacent vertices.
ClosedSystem closure(const RingDiagram& seed);

// Seeded by B(sigma, sigma^-1 tau sigma).
ClosedSystem closed_system(const Surface& x);

// Throws std::invalid_argument on a degree mismatch.
ClosedSystem conjugate_system(const ClosedSystem& s, const Permutation& w);

bool systems_equal(const ClosedSystem& a, const ClosedSystem& b);

}  // namespace origami
