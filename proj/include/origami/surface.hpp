#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "origami/farey.hpp"
#include "origami/perm.hpp"

namespace origami {

// The square-tiled surface X(sigma, tau): n unit squares, the right side of
// square i glued to the left side of sigma(i), the top side to the bottom of
// tau(i).
class Surface {
 public:
  // Throws std::invalid_argument on a degree mismatch or degree 0.
  Surface(Permutation sigma, Permutation tau);

  // "(1,2);(1,3)" in cycle notation (degree = largest label on either side),
  // or the JSON form {"n":3,"sigma":[[1,2]],"tau":[[1,3]]}. Throws ParseError.
  static Surface parse(std::string_view text);

  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& tau() const noexcept { return tau_; }
  std::size_t degree() const noexcept { return sigma_.degree(); }

  PermPair as_pair() const { return {sigma_, tau_}; }

  // "(1,2);(1,3)".
  std::string to_string() const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Permutation sigma_;
  Permutation tau_;
};

inline Surface make_surface(Permutation sigma, Permutation tau) {
  return Surface(std::move(sigma), std::move(tau));
}

bool is_connected(const Surface& x);

// The commutator sigma^-1 tau^-1 sigma tau (left to right).
Permutation commutator(const Surface& x);

struct ConePoint {
  std::vector<int> cycle;  // 1-based square labels whose south-west corner is this point
  int angle = 0;           // in units of 2*pi
};

struct ConeData {
  Permutation theta;
  std::vector<ConePoint> cone_points;  // nontrivial cycles of theta
  std::vector<int> stratum;            // angle - 1 per cone point, descending
  std::vector<int> genus;              // one entry per connected component
};

ConeData cone_data(const Surface& x);

// X_90 = X(tau, sigma^-1): X rotated a quarter turn clockwise.
Surface rotate90(const Surface& x);

bool is_equivalent(const Surface& x, const Surface& y);

// ([[1, h], [0, 1]], [[1, 0], [v, 1]]) with h = ord(sigma), v = ord(tau).
std::pair<PosMatrix, PosMatrix> dehn_twist_matrices(const Surface& x);

}  // namespace origami
