#include "origami/farey.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "origami/error.hpp"

namespace origami {

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) throw std::invalid_argument("slope components must be nonnegative");
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("slope " + std::to_string(p) + "/" + std::to_string(q) +
                                " is not in lowest terms");
  }
  return {p, q};
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t& pos, bool allow_sign) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::size_t start = pos;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t digits = pos;
  std::int64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
      throw ParseError("integer too large", start);
    }
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == digits) throw ParseError("expected an integer", start);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return negative ? -value : value;
}

void expect(std::string_view text, std::size_t& pos, char ch) {
  if (pos >= text.size() || text[pos] != ch) {
    throw ParseError(std::string("expected '") + ch + "'", pos);
  }
  ++pos;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "inf") {
    return infinity();
  }
  std::size_t pos = 0;
  const std::int64_t p = parse_int(text, pos, false);
  expect(text, pos, '/');
  const std::size_t q_at = pos;
  const std::int64_t q = parse_int(text, pos, false);
  if (pos != text.size()) throw ParseError("trailing characters after slope", pos);
  if (std::gcd(p, q) != 1) throw ParseError("slope must be in lowest terms", q_at);
  return {p, q};
}

std::string Slope::to_string() const { return std::to_string(p) + "/" + std::to_string(q); }

bool slope_less(const Slope& a, const Slope& b) noexcept {
  return static_cast<__int128>(a.p) * b.q < static_cast<__int128>(b.p) * a.q;
}

bool is_neighbor(const Slope& a, const Slope& b) noexcept {
  return static_cast<__int128>(b.p) * a.q - static_cast<__int128>(a.p) * b.q == 1;
}

Slope farey_add(const Slope& a, const Slope& b) {
  if (!is_neighbor(a, b)) {
    throw std::invalid_argument(a.to_string() + " and " + b.to_string() + " are not Farey neighbors");
  }
  return {a.p + b.p, a.q + b.q};
}

CFrac CFrac::make(std::vector<std::int64_t> terms) {
  if (terms.empty()) throw std::invalid_argument("continued fraction needs at least one term");
  for (auto t : terms) {
    if (t < 1) throw std::invalid_argument("continued fraction terms must be positive");
  }
  return CFrac{std::move(terms)};
}

bool CFrac::is_canonical() const noexcept {
  return !terms.empty() && (terms.size() == 1 || terms.back() > 1);
}

Slope CFrac::value() const { return cf_value(terms); }

std::string CFrac::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(terms[i]);
  }
  return s + "]";
}

Slope cf_value(std::span<const std::int64_t> terms) {
  // Evaluate from the back: v = n/d, then 1/(t + v) = d/(t*d + n).
  std::int64_t num = 0, den = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const std::int64_t next_den = *it * den + num;
    num = den;
    den = next_den;
  }
  return {num, den};
}

CFrac cfrac(const Slope& r) {
  if (r.p <= 0 || r.q <= 0 || r.p > r.q) {
    throw std::invalid_argument("continued fractions are defined for slopes in (0, 1], got " +
                                r.to_string());
  }
  std::vector<std::int64_t> terms;
  std::int64_t num = r.q, den = r.p;  // expand q/p
  while (den != 0) {
    terms.push_back(num / den);
    num %= den;
    std::swap(num, den);
  }
  return CFrac{std::move(terms)};
}

std::pair<Slope, Slope> cf_neighbors(const CFrac& c) {
  std::vector<std::int64_t> lowered = c.terms;
  lowered.back() -= 1;
  std::span<const std::int64_t> parent(c.terms.data(), c.terms.size() - 1);
  return {cf_value(lowered), cf_value(parent)};
}

std::string IntMatrix::to_string() const {
  return std::to_string(a) + "," + std::to_string(c) + ";" + std::to_string(b) + "," +
         std::to_string(d);
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::size_t pos = 0;
  const auto r00 = parse_int(text, pos, true);
  expect(text, pos, ',');
  const auto r01 = parse_int(text, pos, true);
  expect(text, pos, ';');
  const auto r10 = parse_int(text, pos, true);
  expect(text, pos, ',');
  const auto r11 = parse_int(text, pos, true);
  if (pos != text.size()) throw ParseError("trailing characters after matrix", pos);
  return from_rows(r00, r01, r10, r11);
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) noexcept {
  // Rows of x times columns of y; x = [[x.a, x.c], [x.b, x.d]].
  return {x.a * y.a + x.c * y.b, x.b * y.a + x.d * y.b, x.a * y.c + x.c * y.d,
          x.b * y.c + x.d * y.d};
}

IntMatrix operator-(const IntMatrix& x) noexcept { return {-x.a, -x.b, -x.c, -x.d}; }

PosMatrix::PosMatrix(const IntMatrix& m) : m_(m) {
  if (!m.is_nonnegative() || m.det() != 1) {
    throw std::invalid_argument("matrix " + m.to_string() + " is not in SL2+(Z)");
  }
}

PosMatrix matrix_from_pair(const Slope& r1, const Slope& r2) {
  if (!is_neighbor(r1, r2)) {
    throw std::invalid_argument(r1.to_string() + " and " + r2.to_string() +
                                " are not Farey neighbors");
  }
  return PosMatrix(IntMatrix{r1.q, r1.p, r2.q, r2.p});
}

std::pair<Slope, Slope> pair_from_matrix(const PosMatrix& m) {
  return {m.first_slope(), m.second_slope()};
}

IntMatrix letter_matrix(Letter g) noexcept {
  switch (g) {
    case Letter::L: return IntMatrix::L();
    case Letter::R: return IntMatrix::R();
    case Letter::L_inv: return IntMatrix::L().inverse();
    case Letter::R_inv: return IntMatrix::R().inverse();
  }
  return IntMatrix::identity();
}

Letter inverse(Letter g) noexcept {
  switch (g) {
    case Letter::L: return Letter::L_inv;
    case Letter::R: return Letter::R_inv;
    case Letter::L_inv: return Letter::L;
    case Letter::R_inv: return Letter::R;
  }
  return g;
}

std::string to_string(Letter g) {
  switch (g) {
    case Letter::L: return "L";
    case Letter::R: return "R";
    case Letter::L_inv: return "L^-1";
    case Letter::R_inv: return "R^-1";
  }
  return "?";
}

std::string to_string(std::span<const Letter> word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += to_string(word[i]);
  }
  return s;
}

IntMatrix eval(std::span<const Letter> word) {
  IntMatrix m = IntMatrix::identity();
  for (Letter g : word) m = m * letter_matrix(g);
  return m;
}

std::vector<Letter> positive_word(const PosMatrix& pm) {
  IntMatrix m = pm.matrix();
  std::vector<Letter> reversed;
  while (m != IntMatrix::identity()) {
    // Exactly one column dominates the other componentwise.
    if (m.c >= m.a && m.d >= m.b) {
      // m = m' L^k with m' = [[a, c - k a], [b, d - k b]].
      std::int64_t k = std::numeric_limits<std::int64_t>::max();
      if (m.a > 0) k = std::min(k, m.c / m.a);
      if (m.b > 0) k = std::min(k, m.d / m.b);
      m.c -= k * m.a;
      m.d -= k * m.b;
      reversed.insert(reversed.end(), static_cast<std::size_t>(k), Letter::L);
    } else {
      std::int64_t k = std::numeric_limits<std::int64_t>::max();
      if (m.c > 0) k = std::min(k, m.a / m.c);
      if (m.d > 0) k = std::min(k, m.b / m.d);
      m.a -= k * m.c;
      m.b -= k * m.d;
      reversed.insert(reversed.end(), static_cast<std::size_t>(k), Letter::R);
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<Letter> sl2z_word(const IntMatrix& m) {
  if (m.det() != 1) {
    throw std::invalid_argument("matrix " + m.to_string() + " has determinant " +
                                std::to_string(m.det()));
  }
  // Row operations on the left: L^k m adds k * row 2 to row 1, R^k m adds
  // k * row 1 to row 2. Reduce the first column to (+-1, 0), recording the
  // inverses of the applied letters.
  IntMatrix x = m;
  std::vector<Letter> word;
  auto apply = [&](Letter g, std::int64_t times) {
    for (std::int64_t i = 0; i < times; ++i) {
      x = letter_matrix(g) * x;
      word.push_back(inverse(g));
    }
  };
  while (x.b != 0) {
    if (x.a == 0) {
      apply(Letter::L, 1);
    } else if (std::llabs(x.a) > std::llabs(x.b)) {
      const std::int64_t q = x.a / x.b;
      apply(q > 0 ? Letter::L_inv : Letter::L, std::llabs(q));
    } else {
      const std::int64_t q = x.b / x.a;
      apply(q > 0 ? Letter::R_inv : Letter::R, std::llabs(q));
    }
  }
  // x = [[s, c], [0, s]] with s = +-1, i.e. s * L^{s c}.
  std::int64_t shift = x.c;
  if (x.a == -1) {
    // -I = (L R^-1 L)^2.
    for (int rep = 0; rep < 2; ++rep) {
      word.insert(word.end(), {Letter::L, Letter::R_inv, Letter::L});
    }
    shift = -x.c;
  }
  word.insert(word.end(), static_cast<std::size_t>(std::llabs(shift)),
              shift >= 0 ? Letter::L : Letter::L_inv);
  return word;
}

}  // namespace origami
