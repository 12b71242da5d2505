#include <gtest/gtest.h>

#include "origami/error.hpp"
#include "origami/farey.hpp"
#include "support.hpp"

using namespace origami;
using namespace testing_support;

TEST(Slope, ParseAndPrint) {
  EXPECT_EQ(Slope::parse("2/5"), (Slope{2, 5}));
  EXPECT_EQ(Slope::parse("inf"), Slope::infinity());
  EXPECT_EQ(Slope::parse("1/0"), Slope::infinity());
  EXPECT_EQ(Slope::parse("0/1"), Slope::zero());
  EXPECT_THROW(Slope::parse("2/4"), ParseError);
  EXPECT_THROW(Slope::parse("-1/2"), ParseError);
  EXPECT_THROW(Slope::parse("1/2x"), ParseError);
  EXPECT_THROW(Slope::parse("0/0"), ParseError);
  for (const auto& r : slopes_up_to(40)) EXPECT_EQ(Slope::parse(r.to_string()), r);
}

TEST(Farey, NeighborsAndMediant) {
  EXPECT_TRUE(is_neighbor({1, 3}, {1, 2}));
  EXPECT_FALSE(is_neighbor({1, 2}, {1, 3}));
  EXPECT_EQ(farey_add({1, 3}, {1, 2}), (Slope{2, 5}));
  EXPECT_EQ(farey_add(Slope::zero(), Slope::infinity()), (Slope{1, 1}));
  EXPECT_THROW(farey_add({1, 3}, {2, 3}), std::invalid_argument);
  for (const auto& [a, b] : farey_pairs(60, 60)) {
    const Slope m = farey_add(a, b);
    EXPECT_TRUE(is_neighbor(a, m) && is_neighbor(m, b));
    EXPECT_TRUE(slope_less(a, m) && slope_less(m, b));
  }
}

TEST(CFrac, ExpansionOfTwoFifths) {
  EXPECT_EQ(cfrac({2, 5}).terms, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(cfrac({1, 1}).terms, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(CFrac::make({2, 2}).to_string(), "[2,2]");
  EXPECT_EQ(cf_value(std::vector<std::int64_t>{}), Slope::zero());
  EXPECT_EQ(cf_value(std::vector<std::int64_t>{0}), Slope::infinity());
  EXPECT_THROW(cfrac(Slope::zero()), std::invalid_argument);
  EXPECT_THROW(cfrac({3, 2}), std::invalid_argument);
  EXPECT_THROW(CFrac::make({}), std::invalid_argument);
  EXPECT_THROW(CFrac::make({1, 0}), std::invalid_argument);
}

TEST(CFrac, CanonicalExpansionsEvaluateBack) {
  for (std::int64_t q = 1; q <= 80; ++q) {
    for (std::int64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const CFrac c = cfrac({p, q});
      EXPECT_TRUE(c.is_canonical());
      EXPECT_EQ(c.value(), (Slope{p, q}));
    }
  }
  EXPECT_FALSE(CFrac::make({2, 1}).is_canonical());
  EXPECT_EQ(CFrac::make({2, 1}).value(), (Slope{1, 3}));
}

TEST(CFrac, NeighborOrientationDependsOnParity) {
  for (std::int64_t q = 2; q <= 60; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const CFrac c = cfrac({p, q});
      const auto [r1, r2] = cf_neighbors(c);
      if (c.terms.size() % 2 == 0) {
        EXPECT_EQ(farey_add(r1, r2), (Slope{p, q})) << c.to_string();
      } else {
        EXPECT_EQ(farey_add(r2, r1), (Slope{p, q})) << c.to_string();
      }
    }
  }
}

TEST(IntMatrix, LayoutAndParsing) {
  const auto m = IntMatrix::parse("1,2;0,1");
  EXPECT_EQ(m.a, 1);
  EXPECT_EQ(m.c, 2);
  EXPECT_EQ(m.b, 0);
  EXPECT_EQ(m.to_string(), "1,2;0,1");
  EXPECT_EQ(IntMatrix::L().to_string(), "1,1;0,1");
  EXPECT_EQ(IntMatrix::R().to_string(), "1,0;1,1");
  EXPECT_EQ(IntMatrix::parse("-1,0;0,-1"), -IntMatrix::identity());
  EXPECT_THROW(IntMatrix::parse("1,2;0"), ParseError);
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_sl2z(rng, 1 + i % 12);
    EXPECT_EQ(IntMatrix::parse(x.to_string()), x);
    EXPECT_EQ(x.det(), 1);
    EXPECT_EQ(x * x.inverse(), IntMatrix::identity());
  }
}

TEST(PosMatrix, RejectsNegativeEntriesAndWrongDeterminant) {
  EXPECT_THROW(PosMatrix(IntMatrix::from_rows(1, -1, 0, 1)), std::invalid_argument);
  EXPECT_THROW(PosMatrix(IntMatrix::from_rows(2, 1, 1, 2)), std::invalid_argument);
  const PosMatrix m(IntMatrix::from_rows(2, 1, 1, 1));
  EXPECT_EQ(m.first_slope(), (Slope{1, 2}));
  EXPECT_EQ(m.second_slope(), (Slope{1, 1}));
}

TEST(PosMatrix, FareyPairCorrespondence) {
  for (const auto& [a, b] : farey_pairs(40, 40)) {
    const auto m = matrix_from_pair(a, b);
    EXPECT_EQ(pair_from_matrix(m), std::make_pair(a, b));
  }
}

TEST(Words, PositiveWordIsTheUniqueFactorization) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    const auto w = random_positive_word(rng, 14);
    const PosMatrix m(eval(w));
    EXPECT_EQ(positive_word(m), w) << to_string(w);
  }
  EXPECT_EQ(to_string(positive_word(PosMatrix::identity())), "e");
}

TEST(Words, Sl2zWordEvaluatesBack) {
  const auto rho = IntMatrix::from_rows(0, 1, -1, 0);
  EXPECT_EQ(eval(sl2z_word(rho)), rho);
  EXPECT_EQ(eval(sl2z_word(rho.inverse())), rho.inverse());
  EXPECT_EQ(eval(sl2z_word(-IntMatrix::identity())), -IntMatrix::identity());
  EXPECT_TRUE(sl2z_word(IntMatrix::identity()).empty());
  EXPECT_THROW(sl2z_word(IntMatrix::from_rows(2, 0, 0, 1)), std::invalid_argument);
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto m = random_sl2z(rng, 1 + i % 20);
    EXPECT_EQ(eval(sl2z_word(m)), m) << m.to_string();
  }
}
