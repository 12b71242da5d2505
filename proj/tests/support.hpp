#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "origami/farey.hpp"
#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace testing_support {

using namespace origami;

using Rng = std::mt19937_64;

Permutation random_perm(Rng& rng, std::size_t n);
Surface random_surface(Rng& rng, std::size_t n);
Surface random_connected_surface(Rng& rng, std::size_t n);

// Every permutation of degree n in lexicographic order of images.
std::vector<Permutation> all_perms(std::size_t n);

// One representative per simultaneous-conjugacy class of transitive pairs,
// found by brute force over S_n x S_n. Classes are identified with an S_n scan,
// not with canonical_form.
std::vector<Surface> connected_classes(std::size_t n);

// Some w with relabel(a, w) == b, by scanning S_n.
std::optional<Permutation> brute_conjugator(const PermPair& a, const PermPair& b);

// Farey neighbours r1 <_n r2 in [0, inf] from the Stern-Brocot tree, with
// q1 + q2 <= max_q and p1 + p2 <= max_p.
std::vector<std::pair<Slope, Slope>> farey_pairs(std::int64_t max_q, std::int64_t max_p);

// All slopes p/q in lowest terms with p + q <= max_sum, 0/1 and 1/0 included.
std::vector<Slope> slopes_up_to(std::int64_t max_sum);

std::vector<Letter> random_positive_word(Rng& rng, std::size_t max_len);

// All words over {L, R} of length <= max_len, shortest first.
std::vector<std::vector<Letter>> positive_words(std::size_t max_len);

IntMatrix random_sl2z(Rng& rng, int steps);

// B in Veech(X) for B = eval(word), decided on classes of pairs with
// g_L = L^-1, its inverse and the quarter turn only.
bool stabilizer_oracle(const Surface& x, const std::vector<Letter>& word);

Surface eierlegende_wollmilchsau();

}  // namespace testing_support
