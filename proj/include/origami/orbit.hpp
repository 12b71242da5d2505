#pragma once

#include <set>
#include <span>
#include <vector>

#include "origami/farey.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

// g . X for a generator g of SL2(Z):
//   L^-1 . X(s, t) = X(s, t s)        L . X(s, t) = X(s, t s^-1)
//   R^-1 . X(s, t) = X(s t, t)        R . X(s, t) = X(s t^-1, t)
Surface act(const Surface& x, Letter g);

// B^-1 . X for B = w1 w2 ... wk. X(a, b) is equivalent to X exactly when
// B lies in the Veech group.
Surface act_inverse(const Surface& x, std::span<const Letter> word);

struct OrbitState {
  PermPair surface_class;         // canonical_pair of X(w1, w2)
  PermPair code_pair;             // the left-code pair (w1, w2) first reaching the class
  PosMatrix representative_matrix;  // a shortest positive word with that code pair
};

// The classes of X(Code^L(A)) over A in SL2+(Z), breadth first from A = I,
// L before R. Throws Refused for a disconnected surface.
std::vector<OrbitState> s_plus(const Surface& x);

// The SL2(Z)-orbit of X's class under g_L, g_L^-1 and the quarter turn
// (s, t) -> (t, s^-1), as canonical pairs. Throws Refused when disconnected.
std::set<PermPair> orbit_bfs_oracle(const Surface& x);

// Index of the Veech group in SL2(Z): |s_plus(X)|.
std::size_t veech_index(const Surface& x);

}  // namespace origami
