#include "origami/veech.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "origami/codes.hpp"
#include "origami/error.hpp"
#include "origami/orbit.hpp"

namespace origami {

namespace {

void require_connected(const Surface& x) {
  if (!is_connected(x)) throw Refused("surface " + x.to_string() + " is not connected");
}

// All w with relabel(a, w) == b when <a.first, a.second> is transitive: w is
// fixed by the image of point 0, then forced along the generators.
std::vector<Permutation> all_conjugators(const PermPair& a, const PermPair& b) {
  const auto n = a.first.degree();
  std::vector<Permutation> out;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<int> w(n, -1);
    std::vector<int> stack{0};
    w[0] = static_cast<int>(t);
    bool ok = true;
    while (ok && !stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (const auto& [pa, pb] : {std::pair{&a.first, &b.first}, std::pair{&a.second, &b.second}}) {
        const int j = (*pa)[i];
        const int image = (*pb)[w[i]];
        if (w[j] == -1) {
          w[j] = image;
          stack.push_back(j);
        } else if (w[j] != image) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || std::find(w.begin(), w.end(), -1) != w.end()) continue;
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    out.push_back(Permutation::from_images(std::move(w)));
  }
  return out;
}

}  // namespace

std::optional<Permutation> veech_contains_positive(const Surface& x, const PosMatrix& a) {
  require_connected(x);
  const PermPair base = code_left_matrix(x, PosMatrix::identity());
  const PermPair target = code_left_matrix(x, a);
  return simultaneous_conjugator(base.first, base.second, target.first, target.second);
}

bool veech_contains(const Surface& x, const IntMatrix& b) {
  require_connected(x);
  const auto word = sl2z_word(b);
  return is_equivalent(act_inverse(x, word), x);
}

IntMatrix rotation_pattern(const IntMatrix& a, int k) {
  const IntMatrix rho = IntMatrix::from_rows(0, 1, -1, 0);
  IntMatrix out = a;
  for (int i = 0; i < ((k % 4) + 4) % 4; ++i) out = out * rho;
  return out;
}

bool rotated_code_test(const Surface& x, const PosMatrix& a, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("rotation count must be 1, 2 or 3");
  require_connected(x);
  Surface rotated = x;
  for (int i = 0; i < k; ++i) rotated = rotate90(rotated);
  const PermPair code = code_left_matrix(x, a);
  const PermPair base = code_left_matrix(rotated, PosMatrix::identity());
  const bool verdict =
      simultaneous_conjugator(base.first, base.second, code.first, code.second).has_value();
  if (verdict && !veech_contains(x, rotation_pattern(a.matrix(), k))) {
    throw InvariantBreach("rotated code test accepts " + a.to_string() + " at k=" +
                          std::to_string(k) + " but " +
                          rotation_pattern(a.matrix(), k).to_string() +
                          " is not in the Veech group");
  }
  return verdict;
}

CodeGroup::CodeGroup(const Surface& x) : x_(x) {
  require_connected(x);
  base_ = code_left_matrix(x, PosMatrix::identity());
  std::vector<std::pair<PermPair, PosMatrix>> queue{{base_, PosMatrix::identity()}};
  realized_.emplace(base_, PosMatrix::identity());
  const PosMatrix l(IntMatrix::L()), r(IntMatrix::R());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [pair, a] = queue[head];
    const auto& [w1, w2] = pair;
    const std::pair<PermPair, PosMatrix> children[] = {{{w1, w1 * w2}, a * l},
                                                        {{w1 * w2, w2}, a * r}};
    for (const auto& child : children) {
      if (realized_.emplace(child.first, child.second).second) queue.push_back(child);
    }
  }
}

std::vector<CodeGroupElement> CodeGroup::elements() const {
  std::vector<CodeGroupElement> out;
  for (const auto& [pair, m] : realized_) {
    auto w = simultaneous_conjugator(base_.first, base_.second, pair.first, pair.second);
    if (w) out.push_back({pair, *w});
  }
  std::sort(out.begin(), out.end(),
            [](const CodeGroupElement& a, const CodeGroupElement& b) { return a.pair < b.pair; });
  return out;
}

template <class Keep>
std::vector<Permutation> CodeGroup::scan(std::size_t bound, Keep keep) const {
  const auto n = x_.degree();
  if (n > bound) {
    throw Refused("degree " + std::to_string(n) + " exceeds the exhaustive-search bound " +
                  std::to_string(bound) + "; use the anchored search instead");
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation w = Permutation::from_images(images);
    if (keep(relabel(base_, w))) out.push_back(std::move(w));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> CodeGroup::stabilizer(std::size_t bound) const {
  return scan(bound, [&](const PermPair& p) { return p == base_; });
}

std::vector<Permutation> CodeGroup::code_group(std::size_t bound) const {
  return scan(bound, [&](const PermPair& p) { return is_realized(p); });
}

std::vector<Permutation> CodeGroup::code_group_by_veech(std::size_t bound) const {
  std::unordered_map<PermPair, bool, PermPairHash> verdicts;
  return scan(bound, [&](const PermPair& p) {
    const auto it = realized_.find(p);
    if (it == realized_.end()) return false;
    auto [v, fresh] = verdicts.emplace(p, false);
    if (fresh) v->second = veech_contains(x_, it->second.matrix());
    return v->second;
  });
}

std::vector<Permutation> CodeGroup::stabilizer_anchored() const {
  auto out = all_conjugators(base_, base_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> CodeGroup::code_group_anchored() const {
  std::vector<Permutation> out;
  for (const auto& [pair, m] : realized_) {
    for (auto& w : all_conjugators(base_, pair)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CodeGroupElement CodeGroup::identity() const {
  return {base_, Permutation::identity(x_.degree())};
}

void CodeGroup::check(const CodeGroupElement& e) const {
  if (!is_realized(e.pair) || relabel(base_, e.witness) != e.pair) {
    throw std::invalid_argument("code pair (" + e.pair.first.to_string() + ", " +
                                e.pair.second.to_string() +
                                ") is not a realized element with that witness");
  }
}

CodeGroupElement CodeGroup::op(const CodeGroupElement& a, const CodeGroupElement& b) const {
  check(a);
  check(b);
  Permutation w = b.witness * a.witness;
  PermPair pair = relabel(base_, w);
  if (!is_realized(pair)) throw InvariantBreach("product of realized code pairs is not realized");
  return {std::move(pair), std::move(w)};
}

CodeGroupElement CodeGroup::inverse(const CodeGroupElement& a) const {
  check(a);
  Permutation w = a.witness.inverse();
  PermPair pair = relabel(base_, w);
  if (!is_realized(pair)) throw InvariantBreach("inverse of a realized code pair is not realized");
  return {std::move(pair), std::move(w)};
}

std::vector<Permutation> group_S_X(const Surface& x, std::size_t bound) {
  return CodeGroup(x).stabilizer(bound);
}

std::vector<Permutation> group_G_X(const Surface& x, std::size_t bound) {
  return CodeGroup(x).code_group(bound);
}

}  // namespace origami
