#include <gtest/gtest.h>

#include <set>

#include "origami/error.hpp"
#include "origami/perm.hpp"
#include "support.hpp"

using namespace origami;
using namespace testing_support;

TEST(Permutation, ComposeLeftToRight) {
  const auto p = Permutation::parse("(1,2,4)", 4);
  const auto q = Permutation::parse("(2,3)", 4);
  EXPECT_EQ((p * q).to_string(), "(1,3,2,4)");
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ((p * q)[i], q[p[i]]);
}

TEST(Permutation, IdentityPrintsAsId) {
  EXPECT_EQ(Permutation::identity(5).to_string(), "id");
  EXPECT_EQ(Permutation::parse("id", 3), Permutation::identity(3));
  EXPECT_EQ(Permutation::parse("(1)(2)", 2), Permutation::identity(2));
}

TEST(Permutation, ParseErrorsCarryPositions) {
  try {
    Permutation::parse("(1,2)(2,3)");
    FAIL() << "repeated label accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(Permutation::parse("(1,x)"), ParseError);
  EXPECT_THROW(Permutation::parse("(1,5)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("(0,1)"), ParseError);
  EXPECT_THROW(Permutation::parse("(1,2"), ParseError);
}

TEST(Permutation, FromImagesRejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 2}), std::invalid_argument);
}

TEST(Permutation, PrintParseRoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto p = random_perm(rng, n);
    EXPECT_EQ(Permutation::parse(p.to_string(), n), p);
  }
}

TEST(Permutation, PowerAndOrderMatchRepeatedProducts) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_perm(rng, 1 + i % 8);
    Permutation acc = Permutation::identity(p.degree());
    std::uint64_t order = 0;
    for (std::uint64_t k = 1; k <= 1000; ++k) {
      acc = acc * p;
      EXPECT_EQ(p.pow(static_cast<std::int64_t>(k)), acc);
      if (acc.is_identity()) {
        order = k;
        break;
      }
    }
    EXPECT_EQ(p.order(), order);
    EXPECT_EQ(p.pow(-1), p.inverse());
    EXPECT_TRUE((p * p.inverse()).is_identity());
  }
}

TEST(Relabel, IsARightActionAndAHomomorphism) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 7;
    const auto p = random_perm(rng, n), q = random_perm(rng, n);
    const auto w1 = random_perm(rng, n), w2 = random_perm(rng, n);
    EXPECT_EQ(relabel(p, w1 * w2), relabel(relabel(p, w1), w2));
    EXPECT_EQ(relabel(p * q, w1), relabel(p, w1) * relabel(q, w1));
    EXPECT_EQ(relabel(p, w1), w1.inverse() * p * w1);
    const auto r = relabel(p, w1);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(r[w1[k]], w1[p[k]]);
  }
}

TEST(Orbits, TransitivityOfGeneratedGroup) {
  EXPECT_TRUE(is_transitive(Permutation::parse("(1,2)", 3), Permutation::parse("(1,3)", 3)));
  EXPECT_FALSE(is_transitive(Permutation::parse("(1,2)", 3), Permutation::identity(3)));
  const auto o = orbits(Permutation::parse("(1,3)", 4), Permutation::identity(4));
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o[0], (std::vector<int>{0, 2}));
}

TEST(SimultaneousConjugator, AgreesWithExhaustiveSearch) {
  Rng rng(14);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 6;
    const PermPair a{random_perm(rng, n), random_perm(rng, n)};
    const PermPair b = i % 2 ? relabel(a, random_perm(rng, n))
                             : PermPair{random_perm(rng, n), random_perm(rng, n)};
    const auto fast = simultaneous_conjugator(a.first, a.second, b.first, b.second);
    const auto slow = brute_conjugator(a, b);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << a.first.to_string() << " " << b.first.to_string();
    if (fast) EXPECT_EQ(relabel(a, *fast), b);
  }
}

TEST(CanonicalForm, SeparatesExactlyTheConjugacyClassesOfS4Pairs) {
  const auto perms = all_perms(4);
  std::set<PermPair> orbits_seen;
  std::size_t orbit_count = 0;
  std::set<PermPair> canonicals;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      const auto cf = canonical_form(a, b);
      EXPECT_EQ(relabel(PermPair{a, b}, cf.labeling), cf.pair);
      if (orbits_seen.contains({a, b})) continue;
      ++orbit_count;
      for (const auto& w : perms) {
        const auto r = relabel(PermPair{a, b}, w);
        orbits_seen.insert(r);
        EXPECT_EQ(canonical_pair(r.first, r.second), cf.pair);
      }
      canonicals.insert(cf.pair);
    }
  }
  EXPECT_EQ(canonicals.size(), orbit_count);
}

TEST(CanonicalForm, InvariantUnderRandomRelabelingUpToDegreeNine) {
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto a = random_perm(rng, n), b = random_perm(rng, n);
    const auto w = random_perm(rng, n);
    EXPECT_EQ(canonical_pair(a, b), canonical_pair(relabel(a, w), relabel(b, w)));
  }
}
