#include <gtest/gtest.h>

#include <map>
#include <set>

#include "origami/closed_system.hpp"
#include "origami/codes.hpp"
#include "support.hpp"

using namespace origami;
using namespace testing_support;

namespace {

Permutation P(const char* text, std::size_t n) { return Permutation::parse(text, n); }

// Diagrams keyed by (center, vertex set), expanded level by level.
using NaiveDiagram = std::pair<Permutation, std::set<Permutation>>;

NaiveDiagram naive(const Permutation& v, const Permutation& u) {
  std::set<Permutation> vertices;
  Permutation w = u;
  while (vertices.insert(w).second) w = v * w;
  return {v, vertices};
}

std::set<NaiveDiagram> naive_closed_system(const Surface& x) {
  const auto& s = x.sigma();
  std::set<NaiveDiagram> all{naive(s, s.inverse() * x.tau() * s)};
  std::set<NaiveDiagram> level = all;
  while (!level.empty()) {
    std::set<NaiveDiagram> next;
    for (const auto& [a, vertices] : level) {
      for (const auto& b : vertices) {
        auto d = naive(a * b, b);
        if (!all.contains(d)) next.insert(d);
      }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

std::set<NaiveDiagram> as_naive(const ClosedSystem& s) {
  std::set<NaiveDiagram> out;
  for (const auto& b : s.diagrams) {
    out.insert({b.center(), std::set<Permutation>(b.vertices().begin(), b.vertices().end())});
  }
  return out;
}

std::vector<int> stratum_of(const Permutation& a, const Permutation& b) {
  return cone_data(Surface(a, b)).stratum;
}

}  // namespace

TEST(RingDiagram, FourSquareExample) {
  const auto b = ring_diagram(P("(1,3,2,4)", 4), P("(1,3,4)", 4));
  std::set<std::string> vertices;
  for (const auto& v : b.vertices()) vertices.insert(v.to_string());
  EXPECT_EQ(vertices, (std::set<std::string>{"(1,3,4)", "(1,4,3,2)", "(1,2,3)", "(2,4)"}));
  EXPECT_EQ(b.vertices().size(), 4u);
}

TEST(RingDiagram, Identification) {
  const auto id = Permutation::identity(3);
  EXPECT_EQ(ring_diagram(id, id).vertices().size(), 1u);
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 7;
    const auto u = random_perm(rng, n), v = random_perm(rng, n);
    EXPECT_EQ(ring_diagram(u, v), ring_diagram(u, u * v));
    EXPECT_EQ(ring_diagram(u, v), ring_diagram(u, u.pow(5) * v));
    EXPECT_EQ(ring_diagram(u, v).vertices().size(), u.order());
  }
  EXPECT_THROW(ring_diagram(id, Permutation::identity(2)), std::invalid_argument);
}

TEST(ClosedSystem, TorusSquare) {
  const Surface torus(Permutation::identity(1), Permutation::identity(1));
  const auto s = closed_system(torus);
  ASSERT_EQ(s.diagrams.size(), 1u);
  EXPECT_TRUE(s.contains(ring_diagram(Permutation::identity(1), Permutation::identity(1))));
}

TEST(ClosedSystem, FourSquareSurfaceContainsTheExampleDiagram) {
  const auto x = Surface::parse("(2,3);(1,2,4)");
  const auto s = closed_system(x);
  EXPECT_TRUE(s.contains(ring_diagram(P("(1,3,2,4)", 4), P("(1,3,4)", 4))));
  EXPECT_EQ(as_naive(s), naive_closed_system(x));
  EXPECT_EQ(s.diagrams.size(), 9u);
}

TEST(ClosedSystem, LShapedSurfaceCount) {
  const auto x = Surface::parse("(1,2);(1,3)");
  const auto s = closed_system(x);
  EXPECT_EQ(as_naive(s), naive_closed_system(x));
  EXPECT_EQ(s.diagrams.size(), 4u);
}

TEST(ClosedSystem, MatchesLevelwiseExpansion) {
  Rng rng(62);
  for (int i = 0; i < 60; ++i) {
    const auto x = random_surface(rng, 1 + i % 6);
    EXPECT_EQ(as_naive(closed_system(x)), naive_closed_system(x)) << x.to_string();
  }
}

TEST(ClosedSystem, Conjugation) {
  Rng rng(63);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 6;
    const auto x = random_surface(rng, n);
    const auto s = closed_system(x);
    EXPECT_TRUE(systems_equal(conjugate_system(s, Permutation::identity(n)), s));
    const auto w = random_perm(rng, n);
    EXPECT_TRUE(systems_equal(conjugate_system(conjugate_system(s, w), w.inverse()), s));
    EXPECT_TRUE(systems_equal(conjugate_system(s, w),
                              closed_system(Surface(relabel(x.sigma(), w), relabel(x.tau(), w)))));
  }
}

TEST(ClosedSystem, DifferentSurfacesDiffer) {
  const Surface torus(Permutation::identity(1), Permutation::identity(1));
  EXPECT_FALSE(systems_equal(closed_system(torus), closed_system(Surface::parse("(1,2);(1,3)"))));
}

TEST(ClosedSystem, CommutatorConjugationFixesTheSystem) {
  Rng rng(64);
  for (int i = 0; i < 60; ++i) {
    const auto x = random_surface(rng, 2 + i % 6);
    const auto s = closed_system(x);
    EXPECT_TRUE(systems_equal(conjugate_system(s, commutator(x)), s)) << x.to_string();
  }
}

TEST(ClosedSystem, RotationRelabelsBySigma) {
  Rng rng(65);
  for (int i = 0; i < 60; ++i) {
    Surface x = random_surface(rng, 2 + i % 6);
    const auto start = closed_system(x);
    auto current = start;
    // Four quarter turns chained back to the start.
    for (int k = 0; k < 4; ++k) {
      const Surface next = rotate90(x);
      const auto rotated = closed_system(next);
      EXPECT_TRUE(systems_equal(current, conjugate_system(rotated, x.sigma())));
      x = next;
      current = rotated;
    }
    EXPECT_TRUE(systems_equal(current, start));
  }
}

TEST(ClosedSystem, ReseedingFromAnyMemberGivesTheSameSystem) {
  Rng rng(66);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_surface(rng, 2 + i % 5);
    const auto s = closed_system(x);
    for (const auto& b : s.diagrams) {
      const auto& g = b.center();
      const auto& d = b.vertices().front();
      EXPECT_TRUE(systems_equal(closed_system(Surface(g, d * g.inverse())), s));
    }
  }
}

TEST(ClosedSystem, MemberSurfacesStayInTheStratum) {
  Rng rng(67);
  for (int i = 0; i < 40; ++i) {
    const auto x = random_surface(rng, 2 + i % 6);
    const auto stratum = cone_data(x).stratum;
    for (const auto& b : closed_system(x).diagrams) {
      for (const auto& v : b.vertices()) {
        EXPECT_EQ(stratum_of(b.center(), v * b.center().inverse()), stratum);
      }
    }
  }
}

TEST(ClosedSystem, ContainsEveryFareyPairOfLeftCodes) {
  Rng rng(68);
  const auto pairs = farey_pairs(12, 12);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_surface(rng, 2 + i % 6);
    const auto s = closed_system(x);
    for (const auto& [a, b] : pairs) {
      EXPECT_TRUE(s.contains(ring_diagram(code_left(x, a), code_left(x, b))))
          << x.to_string() << " " << a.to_string() << " " << b.to_string();
    }
  }
}
