#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "origami/farey.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

// A witness w with relabel(Code^L(I), w) == Code^L(A) when A is in the Veech
// group, nullopt otherwise. Throws Refused for a disconnected surface.
std::optional<Permutation> veech_contains_positive(const Surface& x, const PosMatrix& a);

// B^-1 . X is equivalent to X. Throws Refused for a disconnected surface and
// std::invalid_argument unless det B == 1.
bool veech_contains(const Surface& x, const IntMatrix& b);

// A rho^k with rho = [[0,1],[-1,0]], the clockwise quarter turn.
IntMatrix rotation_pattern(const IntMatrix& a, int k);

// Code^L_X(A) is simultaneously conjugate to Code^L(I) of X rotated k quarter
// turns. A true verdict is cross-checked against veech_contains of
// rotation_pattern(A, k); disagreement throws InvariantBreach.
// k must be 1, 2 or 3.
bool rotated_code_test(const Surface& x, const PosMatrix& a, int k);

struct CodeGroupElement {
  PermPair pair;
  Permutation witness;  // relabel(Code^L(I), witness) == pair
};

inline constexpr std::size_t default_exhaustive_bound = 8;

// Left-code pairs realized by positive matrices and the groups G_X, S_X of
// relabelings taking Code^L(I) to a realized pair / to itself.
class CodeGroup {
 public:
  // Throws Refused for a disconnected surface.
  explicit CodeGroup(const Surface& x);

  const Surface& surface() const noexcept { return x_; }
  const PermPair& base() const noexcept { return base_; }

  // Every pair Code^L(A), A in SL2+(Z), with a shortest positive matrix for it.
  const std::unordered_map<PermPair, PosMatrix, PermPairHash>& realized() const noexcept {
    return realized_;
  }
  bool is_realized(const PermPair& p) const { return realized_.contains(p); }

  // Realized pairs conjugate to Code^L(I), one element each.
  std::vector<CodeGroupElement> elements() const;

  // Scans S_n. Throws Refused when n exceeds `bound`; the anchored variants
  // have no bound.
  std::vector<Permutation> stabilizer(std::size_t bound = default_exhaustive_bound) const;
  std::vector<Permutation> code_group(std::size_t bound = default_exhaustive_bound) const;
  // G_X read through Veech membership: w with relabel(Code^L(I), w) realized by
  // a matrix accepted by veech_contains.
  std::vector<Permutation> code_group_by_veech(std::size_t bound = default_exhaustive_bound) const;

  // Relabelings determined by the image of one point, which suffices since
  // <sigma, tau> is transitive.
  std::vector<Permutation> stabilizer_anchored() const;
  std::vector<Permutation> code_group_anchored() const;

  CodeGroupElement identity() const;
  // Code^L(A) (.) Code^L(B) = Code^L(AB): witness is witness(b) then witness(a).
  // Throws std::invalid_argument for an unrealized operand.
  CodeGroupElement op(const CodeGroupElement& a, const CodeGroupElement& b) const;
  CodeGroupElement inverse(const CodeGroupElement& a) const;

 private:
  void check(const CodeGroupElement& e) const;
  template <class Keep>
  std::vector<Permutation> scan(std::size_t bound, Keep keep) const;

  Surface x_;
  PermPair base_;
  std::unordered_map<PermPair, PosMatrix, PermPairHash> realized_;
};

std::vector<Permutation> group_S_X(const Surface& x, std::size_t bound = default_exhaustive_bound);
std::vector<Permutation> group_G_X(const Surface& x, std::size_t bound = default_exhaustive_bound);

}  // namespace origami
