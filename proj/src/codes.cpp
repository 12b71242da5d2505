#include "origami/codes.hpp"

#include <stdexcept>

#include "origami/error.hpp"

namespace origami {

Word cut(const Slope& r, DegenerateConvention convention) {
  const bool swapped = convention == DegenerateConvention::swapped;
  if (r.p == 0) return {swapped ? Symbol::x_inv : Symbol::y_inv};
  if (r.q == 0) return {swapped ? Symbol::y_inv : Symbol::x_inv};

  // Vertical lines x = k are met at parameter k/q, horizontal lines y = m at
  // m/p; coprimality rules out ties in the interior.
  Word w;
  w.reserve(static_cast<std::size_t>(r.p + r.q - 2));
  std::int64_t k = 1, m = 1;
  while (k < r.q || m < r.p) {
    if (m >= r.p || (k < r.q && k * r.p < m * r.q)) {
      w.push_back(Symbol::x);
      ++k;
    } else {
      w.push_back(Symbol::y);
      ++m;
    }
  }
  return w;
}

namespace {

Symbol inverse(Symbol s) {
  switch (s) {
    case Symbol::x: return Symbol::x_inv;
    case Symbol::y: return Symbol::y_inv;
    case Symbol::x_inv: return Symbol::x;
    case Symbol::y_inv: return Symbol::y;
  }
  return s;
}

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  for (Symbol s : w) {
    if (!out.empty() && out.back() == inverse(s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (Symbol c : w) {
    switch (c) {
      case Symbol::x: s += 'x'; break;
      case Symbol::y: s += 'y'; break;
      case Symbol::x_inv: s += 'X'; break;
      case Symbol::y_inv: s += 'Y'; break;
    }
  }
  return s;
}

bool cut_concat_check(const Slope& r1, const Slope& r2) {
  const Slope mid = farey_add(r1, r2);
  const Word target = cut(mid);
  const Word c1 = cut(r1), c2 = cut(r2);
  const Word yx{Symbol::y, Symbol::x}, xy{Symbol::x, Symbol::y};
  return free_reduce(concat({&c1, &yx, &c2})) == target &&
         free_reduce(concat({&c2, &xy, &c1})) == target;
}

Permutation code_left_descent(const Surface& x, const Slope& r) {
  Permutation a = x.sigma();
  Permutation b = x.sigma().inverse() * x.tau() * x.sigma();
  if (r.p == 0) return a;
  if (r.q == 0) return b;
  // Runs of the Stern-Brocot path alternate, starting towards 1/0.
  std::int64_t num = r.p, den = r.q;
  bool up = true;
  while (den != 0) {
    std::int64_t k = num / den;
    const std::int64_t rem = num % den;
    if (rem == 0) --k;
    if (up) {
      a = a * b.pow(k);
    } else {
      b = a.pow(k) * b;
    }
    num = den;
    den = rem;
    up = !up;
  }
  return a * b;
}

Permutation code(const Surface& x, const Slope& r, DegenerateConvention convention) {
  if (r.p + r.q > kDirectCutLimit) {
    return code_left_descent(x, r) * (x.tau() * x.sigma()).inverse();
  }
  const Permutation sigma_inv = x.sigma().inverse();
  const Permutation tau_inv = x.tau().inverse();
  std::vector<int> images(x.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<int>(i);
  for (Symbol s : cut(r, convention)) {
    const Permutation& g = s == Symbol::x       ? x.sigma()
                           : s == Symbol::y     ? x.tau()
                           : s == Symbol::x_inv ? sigma_inv
                                                : tau_inv;
    for (int& v : images) v = g[v];
  }
  return Permutation::from_images(std::move(images));
}

Permutation code_left(const Surface& x, const Slope& r) {
  return code(x, r) * x.tau() * x.sigma();
}

Permutation code_right(const Surface& x, const Slope& r) {
  return code(x, r) * x.sigma() * x.tau();
}

CylinderDecomposition cylinders(const Surface& x, const Slope& r) {
  CylinderDecomposition out{r, {}};
  for (auto& cycle : code_left(x, r).cycles(true)) {
    const auto area = static_cast<std::int64_t>(cycle.size());
    out.cylinders.push_back({std::move(cycle), area});
  }
  return out;
}

PermPair code_left_matrix(const Surface& x, const PosMatrix& m) {
  return {code_left(x, m.first_slope()), code_left(x, m.second_slope())};
}

Permutation code_left_terms(const Surface& x, std::span<const std::int64_t> terms) {
  return code_left(x, cf_value(terms));
}

namespace {

void check_label(const Surface& x, int label) {
  if (label < 1 || static_cast<std::size_t>(label) > x.degree()) {
    throw std::out_of_range("square label " + std::to_string(label) + " outside 1.." +
                            std::to_string(x.degree()));
  }
}

// Left code of prefix ++ [t] from the two deepest convergents of the prefix:
// odd prefix length m gives C_{m-1} C_m^t, even m gives C_m^t C_{m-1}.
class Extension {
 public:
  Extension(const Surface& x, const CFrac& prefix)
      : last_(code_left_terms(x, prefix.terms)),
        before_(code_left_terms(x, std::span(prefix.terms.data(), prefix.terms.size() - 1))),
        odd_(prefix.terms.size() % 2 == 1) {}

  Permutation at(std::int64_t t) const {
    return odd_ ? before_ * last_.pow(t) : last_.pow(t) * before_;
  }

  const Permutation& last() const noexcept { return last_; }

 private:
  Permutation last_;
  Permutation before_;
  bool odd_;
};

std::vector<std::int64_t> appended(const CFrac& prefix, std::int64_t t) {
  std::vector<std::int64_t> terms = prefix.terms;
  terms.push_back(t);
  return terms;
}

}  // namespace

bool is_scc_at(const Surface& x, const Slope& r, int label) {
  check_label(x, label);
  return code_left(x, r)[label - 1] == label - 1;
}

std::int64_t scc_extension(const Surface& x, const CFrac& prefix, int label) {
  check_label(x, label);
  const Extension ext(x, prefix);
  const auto cycles = ext.last().cycles(true);
  if (cycles.size() != 1) {
    throw std::invalid_argument("left code of " + prefix.to_string() + " is " +
                                ext.last().to_string() + ", not an n-cycle");
  }
  const auto n = static_cast<std::int64_t>(x.degree());
  for (std::int64_t t = 1; t <= n; ++t) {
    if (ext.at(t)[label - 1] == label - 1) {
      if (!is_scc_at(x, cf_value(appended(prefix, t)), label)) {
        throw InvariantBreach("scc extension " + std::to_string(t) +
                              " disagrees with the direct left code");
      }
      return t;
    }
  }
  throw InvariantBreach("no scc extension found below n for an n-cycle prefix");
}

std::optional<SccProgression> scc_progression(const Surface& x, const CFrac& prefix, int label) {
  check_label(x, label);
  const Extension ext(x, prefix);
  // Membership of t depends only on t modulo the order of the prefix code.
  const auto order = static_cast<std::int64_t>(ext.last().order());
  std::vector<std::int64_t> members;
  for (std::int64_t t = 1; t <= order; ++t) {
    if (ext.at(t)[label - 1] == label - 1) members.push_back(t);
  }
  if (members.empty()) return std::nullopt;
  SccProgression prog{members.front(), members.size() > 1 ? members[1] - members[0] : order};

  for (std::int64_t i = 1; i <= prog.first + 3 * prog.period; ++i) {
    const bool expected = i >= prog.first && (i - prog.first) % prog.period == 0;
    if (is_scc_at(x, cf_value(appended(prefix, i)), label) != expected) {
      throw InvariantBreach("scc progression for " + prefix.to_string() +
                            " fails the direct scan at " + std::to_string(i));
    }
  }
  return prog;
}

std::optional<int> torus_from_scc_pair(const Surface& x, const CFrac& extended, int label) {
  check_label(x, label);
  const std::span<const std::int64_t> full(extended.terms);
  const auto shorter = full.first(full.size() - 1);
  const int point = label - 1;
  if (code_left_terms(x, shorter)[point] != point || code_left_terms(x, full)[point] != point) {
    return std::nullopt;
  }
  if (x.sigma()[point] != point || x.tau()[point] != point) {
    throw InvariantBreach("square " + std::to_string(label) +
                          " is an scc for consecutive convergents but is not fixed by sigma and tau");
  }
  return label;
}

bool is_union_of_tori(const Surface& x) { return commutator(x).is_identity(); }

}  // namespace origami
