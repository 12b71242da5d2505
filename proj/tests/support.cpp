#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace testing_support {

Permutation random_perm(Rng& rng, std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(std::move(v));
}

Surface random_surface(Rng& rng, std::size_t n) {
  return Surface(random_perm(rng, n), random_perm(rng, n));
}

Surface random_connected_surface(Rng& rng, std::size_t n) {
  while (true) {
    Surface x = random_surface(rng, n);
    if (is_connected(x)) return x;
  }
}

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

// Lehmer rank, matching the order of all_perms.
std::size_t rank_of(const Permutation& p) {
  const std::size_t n = p.degree();
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

}  // namespace

std::vector<Surface> connected_classes(std::size_t n) {
  const auto perms = all_perms(n);
  const std::size_t m = perms.size();
  std::vector<bool> seen(m * m, false);
  std::vector<Surface> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (seen[i * m + j]) continue;
      const Permutation& a = perms[i];
      const Permutation& b = perms[j];
      for (const auto& w : perms) seen[rank_of(relabel(a, w)) * m + rank_of(relabel(b, w))] = true;
      if (is_transitive(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<Permutation> brute_conjugator(const PermPair& a, const PermPair& b) {
  for (const auto& w : all_perms(a.first.degree())) {
    if (relabel(a, w) == b) return w;
  }
  return std::nullopt;
}

std::vector<std::pair<Slope, Slope>> farey_pairs(std::int64_t max_q, std::int64_t max_p) {
  std::vector<std::pair<Slope, Slope>> out;
  std::vector<std::pair<Slope, Slope>> stack{{Slope{0, 1}, Slope{1, 0}}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (a.q + b.q > max_q || a.p + b.p > max_p) continue;
    out.emplace_back(a, b);
    const Slope m{a.p + b.p, a.q + b.q};
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  return out;
}

std::vector<Slope> slopes_up_to(std::int64_t max_sum) {
  std::vector<Slope> out;
  for (std::int64_t s = 1; s <= max_sum; ++s) {
    for (std::int64_t p = 0; p <= s; ++p) {
      if (std::gcd(p, s - p) == 1) out.push_back({p, s - p});
    }
  }
  return out;
}

std::vector<Letter> random_positive_word(Rng& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin;
  std::vector<Letter> w(len(rng));
  for (auto& g : w) g = coin(rng) ? Letter::L : Letter::R;
  return w;
}

std::vector<std::vector<Letter>> positive_words(std::size_t max_len) {
  std::vector<std::vector<Letter>> out{{}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (out[head].size() == max_len) continue;
    for (Letter g : {Letter::L, Letter::R}) {
      auto w = out[head];
      w.push_back(g);
      out.push_back(std::move(w));
    }
  }
  return out;
}

IntMatrix random_sl2z(Rng& rng, int steps) {
  std::uniform_int_distribution<int> pick(0, 3);
  IntMatrix m = IntMatrix::identity();
  for (int i = 0; i < steps; ++i) m = m * letter_matrix(static_cast<Letter>(pick(rng)));
  return m;
}

// Membership by following the class of X under g_L = L^-1, its inverse and
// the quarter turn rot = rho, with R^-1 = rho L rho^-1. B^-1 acts letter by
// letter from the left end of the word.
bool stabilizer_oracle(const Surface& x, const std::vector<Letter>& word) {
  auto g_l = [](const PermPair& p) { return PermPair{p.first, p.second * p.first}; };
  auto g_l_inv = [](const PermPair& p) { return PermPair{p.first, p.second * p.first.inverse()}; };
  auto rot = [](const PermPair& p) { return PermPair{p.second, p.first.inverse()}; };
  PermPair y = x.as_pair();
  for (Letter g : word) {
    switch (g) {
      case Letter::L: y = g_l(y); break;
      case Letter::L_inv: y = g_l_inv(y); break;
      case Letter::R: y = rot(g_l_inv(rot(rot(rot(y))))); break;
      case Letter::R_inv: y = rot(g_l(rot(rot(rot(y))))); break;
    }
  }
  return canonical_pair(y.first, y.second) == canonical_pair(x.sigma(), x.tau());
}

Surface eierlegende_wollmilchsau() {
  return Surface::parse("(1,2,3,4)(5,6,7,8);(1,8,3,6)(2,7,4,5)");
}

}  // namespace testing_support
