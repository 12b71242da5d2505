#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace origami {

// A permutation of the points {0, ..., n-1}.
//
// Products are read left to right: (p * q)(i) = q(p(i)), i.e. apply p first.
// Cycle notation, parsing and printing use the 1-based labels {1, ..., n}.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  // images[i] is the image of point i (0-based). Throws std::invalid_argument
  // unless images is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<int> images);

  // Disjoint cycles over 1-based labels; unlisted labels are fixed.
  static Permutation from_cycles(std::span<const std::vector<int>> cycles, std::size_t n);
  static Permutation from_cycles(std::initializer_list<std::vector<int>> cycles, std::size_t n);

  // Cycle notation "(1,2,3)(4,5)" or "id". The degree is `n` when given,
  // otherwise the largest label. Throws ParseError.
  static Permutation parse(std::string_view text, std::optional<std::size_t> n = std::nullopt);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  // lcm of the cycle lengths.
  std::uint64_t order() const;

  // Disjoint cycles with 1-based labels, each starting at its least label,
  // ordered by that label. Fixed points are included on request.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// p then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// Renames every point i to w(i): the result r satisfies r(w(i)) = w(p(i)).
// This is a right action: relabel(p, w1 * w2) == relabel(relabel(p, w1), w2).
Permutation relabel(const Permutation& p, const Permutation& w);

using PermPair = std::pair<Permutation, Permutation>;

PermPair relabel(const PermPair& pair, const Permutation& w);

// Orbits of <a, b> on the points, each sorted, ordered by least element.
std::vector<std::vector<int>> orbits(const Permutation& a, const Permutation& b);
bool is_transitive(const Permutation& a, const Permutation& b);

// Some w with relabel(a1, w) == b1 and relabel(a2, w) == b2, if one exists.
std::optional<Permutation> simultaneous_conjugator(const Permutation& a1, const Permutation& a2,
                                                   const Permutation& b1, const Permutation& b2);

struct CanonicalForm {
  PermPair pair;
  // relabel(input, labeling) == pair componentwise.
  Permutation labeling;
};

// Representative of the simultaneous-conjugacy class of (a1, a2). Each orbit of
// <a1, a2> is relabeled by breadth-first search from every anchor and the
// lexicographically least result kept; orbits are then ordered by
// (size, relabeled images) and laid out consecutively.
CanonicalForm canonical_form(const Permutation& a1, const Permutation& a2);
PermPair canonical_pair(const Permutation& a1, const Permutation& a2);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

struct PermPairHash {
  std::size_t operator()(const PermPair& p) const noexcept;
};

}  // namespace origami
