#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace origami {

// A slope p/q in lowest terms with p, q >= 0, i.e. the direction (q, p).
// 0/1 is horizontal and 1/0 (infinity) vertical; 0/0 is not a slope.
struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;

  // Throws std::invalid_argument unless gcd(p, q) == 1 and p, q >= 0.
  static Slope make(std::int64_t p, std::int64_t q);
  static Slope zero() { return {0, 1}; }
  static Slope infinity() { return {1, 0}; }

  // "p/q", or "inf" for 1/0. Throws ParseError.
  static Slope parse(std::string_view text);

  bool is_degenerate() const noexcept { return p == 0 || q == 0; }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
};

// Exact order on slopes by cross-multiplication; 1/0 is the greatest.
bool slope_less(const Slope& a, const Slope& b) noexcept;

// a <_n b: a < b and b.p * a.q - a.p * b.q == 1.
bool is_neighbor(const Slope& a, const Slope& b) noexcept;

// The mediant of Farey neighbors. Throws std::invalid_argument otherwise.
Slope farey_add(const Slope& a, const Slope& b);

// Continued fraction [a1, ..., ak] with value 1/(a1 + 1/(a2 + ...)).
// Terms are positive. cfrac() produces the canonical expansion, whose last
// term exceeds 1 unless k == 1.
struct CFrac {
  std::vector<std::int64_t> terms;

  // Throws std::invalid_argument on an empty list or a non-positive term.
  static CFrac make(std::vector<std::int64_t> terms);

  bool is_canonical() const noexcept;
  Slope value() const;
  std::string to_string() const;
};

// Value of an arbitrary term list; [] is 0/1 and a trailing 0 is allowed, so
// [0] evaluates to 1/0.
Slope cf_value(std::span<const std::int64_t> terms);

// Canonical expansion of a slope in (0, 1]. Throws for 0/1, 1/0 and slopes > 1.
CFrac cfrac(const Slope& r);

// (r', r'') = ([a1, ..., ak - 1], [a1, ..., a_{k-1}]). For even k,
// r' <_n r <_n r''; for odd k, r'' <_n r <_n r'.
std::pair<Slope, Slope> cf_neighbors(const CFrac& c);

// Integer 2x2 matrix [[a, c], [b, d]]: columns (a, b) and (c, d).
struct IntMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static IntMatrix identity() { return {1, 0, 0, 1}; }
  // L = [[1,1],[0,1]], R = [[1,0],[1,1]].
  static IntMatrix L() { return {1, 0, 1, 1}; }
  static IntMatrix R() { return {1, 1, 0, 1}; }
  static IntMatrix from_rows(std::int64_t r00, std::int64_t r01, std::int64_t r10,
                             std::int64_t r11) {
    return {r00, r10, r01, r11};
  }

  std::int64_t det() const noexcept { return a * d - b * c; }
  // Inverse of a determinant-1 matrix.
  IntMatrix inverse() const noexcept { return {d, -b, -c, a}; }
  bool is_nonnegative() const noexcept { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }

  // Row-major text "a,c;b,d".
  std::string to_string() const;
  static IntMatrix parse(std::string_view text);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) noexcept;
IntMatrix operator-(const IntMatrix& x) noexcept;

// An element of SL2+(Z): determinant 1, nonnegative entries.
class PosMatrix {
 public:
  PosMatrix() = default;
  // Throws std::invalid_argument unless m is in SL2+(Z).
  explicit PosMatrix(const IntMatrix& m);

  static PosMatrix identity() { return PosMatrix(); }

  const IntMatrix& matrix() const noexcept { return m_; }
  std::int64_t a() const noexcept { return m_.a; }
  std::int64_t b() const noexcept { return m_.b; }
  std::int64_t c() const noexcept { return m_.c; }
  std::int64_t d() const noexcept { return m_.d; }

  // b/a and d/c; a Farey pair.
  Slope first_slope() const noexcept { return {m_.b, m_.a}; }
  Slope second_slope() const noexcept { return {m_.d, m_.c}; }

  std::string to_string() const { return m_.to_string(); }

  friend bool operator==(const PosMatrix&, const PosMatrix&) = default;
  friend PosMatrix operator*(const PosMatrix& x, const PosMatrix& y) {
    return PosMatrix(x.m_ * y.m_);
  }

 private:
  IntMatrix m_;
};

// (r1, r2) with r1 <_n r2  <->  [[q1, q2], [p1, p2]].
PosMatrix matrix_from_pair(const Slope& r1, const Slope& r2);
std::pair<Slope, Slope> pair_from_matrix(const PosMatrix& m);

enum class Letter : std::uint8_t { L, R, L_inv, R_inv };

IntMatrix letter_matrix(Letter g) noexcept;
Letter inverse(Letter g) noexcept;
std::string to_string(Letter g);
std::string to_string(std::span<const Letter> word);

// Left-to-right product of the letters; the empty word is I.
IntMatrix eval(std::span<const Letter> word);

// The positive word in L, R whose product is m (empty for I).
std::vector<Letter> positive_word(const PosMatrix& m);

// A word in L^{+-1}, R^{+-1} evaluating to m. Throws unless det m == 1.
std::vector<Letter> sl2z_word(const IntMatrix& m);

}  // namespace origami
