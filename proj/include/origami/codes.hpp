#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/farey.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

enum class Symbol : std::uint8_t { x, y, x_inv, y_inv };

// A cutting sequence: x for a crossed vertical grid line, y for a horizontal one.
using Word = std::vector<Symbol>;

// How the two axis slopes are encoded as one-letter words.
//   standard:  0 -> y^-1, inf -> x^-1. Consistent with the Farey concatenation
//              law and with the geometric trace; used everywhere by default.
//   swapped:   0 -> x^-1, inf -> y^-1. Reported for comparison only.
enum class DegenerateConvention { standard, swapped };

// Letters read off the lattice-line crossings in the interior of the segment
// from (0,0) to (q,p). Slope 1 gives the empty word.
Word cut(const Slope& r, DegenerateConvention convention = DegenerateConvention::standard);

// Cancels adjacent inverse letters.
Word free_reduce(const Word& w);

// "xxyxx"; inverse letters print as "X" and "Y"; the empty word as "e".
std::string to_string(const Word& w);

// Checks cut(r1 + r2) == reduce(cut(r1) y x cut(r2)) and
// cut(r1 + r2) == reduce(cut(r2) x y cut(r1)). Throws unless r1 <_n r2.
bool cut_concat_check(const Slope& r1, const Slope& r2);

// Slopes with p + q above this skip the explicit cutting word.
inline constexpr std::int64_t kDirectCutLimit = 1 << 14;

// Left code from Farey descent: mediants multiply the codes of their parents.
Permutation code_left_descent(const Surface& x, const Slope& r);

// Substitute x -> sigma, y -> tau (inverse letters to inverses) and multiply
// left to right.
Permutation code(const Surface& x, const Slope& r,
                 DegenerateConvention convention = DegenerateConvention::standard);
// code * tau * sigma
Permutation code_left(const Surface& x, const Slope& r);
// code * sigma * tau
Permutation code_right(const Surface& x, const Slope& r);

struct Cylinder {
  std::vector<int> cycle;  // 1-based labels of the left-boundary saddle connections
  std::int64_t area = 0;
};

struct CylinderDecomposition {
  Slope slope;
  std::vector<Cylinder> cylinders;
};

// One cylinder per cycle (fixed points included) of the left code.
CylinderDecomposition cylinders(const Surface& x, const Slope& r);

// (code_left(b/a), code_left(d/c)) for the columns (a,b), (c,d) of m.
PermPair code_left_matrix(const Surface& x, const PosMatrix& m);

// Left code of the value of a term list; [] denotes 0/1.
Permutation code_left_terms(const Surface& x, std::span<const std::int64_t> terms);

// code_left(r) fixes `label` (1-based). Throws std::out_of_range for a bad label.
bool is_scc_at(const Surface& x, const Slope& r, int label);

// Least t > 0 with prefix ++ [t] an scc at `label`. Requires the left code of
// the prefix to be an n-cycle; throws std::invalid_argument otherwise.
std::int64_t scc_extension(const Surface& x, const CFrac& prefix, int label);

struct SccProgression {
  std::int64_t first = 0;   // least i with prefix ++ [i] an scc at the label
  std::int64_t period = 0;  // every such i is first + period * t, t >= 0
};

// The set {i >= 1 : prefix ++ [i] is an scc at `label`} as an arithmetic
// progression, or nullopt when it is empty.
std::optional<SccProgression> scc_progression(const Surface& x, const CFrac& prefix, int label);

// If extended[0..k-1] and extended are both sccs at `label`, the square is
// fixed by sigma and tau (a torus component) and is returned. Throws
// InvariantBreach if that conclusion fails.
std::optional<int> torus_from_scc_pair(const Surface& x, const CFrac& extended, int label);

// The commutator is trivial.
bool is_union_of_tori(const Surface& x);

struct TraceCodes {
  Permutation code;
  Permutation left;
  Permutation right;
};

// Code, left code and right code obtained by following each saddle connection
// across the square gluings and turning around its endpoint, without the
// cutting-sequence algebra.
TraceCodes trace_oracle(const Surface& x, const Slope& r);

}  // namespace origami
