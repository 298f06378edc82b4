#include <gtest/gtest.h>

#include <random>
#include <set>

#include "starq/classify.hpp"
#include "starq/error.hpp"
#include "starq/glside.hpp"
#include "print.hpp"

using namespace starq;

namespace {

Weight W(const char* s) { return parse_weight(s); }

// The W-orbit under the dot action, by closure.
std::set<Weight> dot_orbit(const Weight& l) {
  std::set<Weight> seen{l};
  std::vector<Weight> todo{l};
  while (!todo.empty()) {
    Weight v = todo.back();
    todo.pop_back();
    for (int i = 1; i < v.n(); ++i) {
      Weight w = dot(i, v);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

size_t infinite_bounded_in_orbit(const Weight& l) {
  size_t k = 0;
  for (const auto& w : dot_orbit(l)) k += gl_classify(w).kind == Verdict::Kind::BoundedInfinite;
  return k;
}

}  // namespace

TEST(GlClassify, Examples) {
  Verdict v = gl_classify(W("(-1,1,0)"));
  EXPECT_EQ(v.kind, Verdict::Kind::BoundedInfinite);
  EXPECT_EQ(v.type, TypeTag::integral(1));
  EXPECT_EQ(gl_classify(W("(3,2,1)")).kind, Verdict::Kind::FiniteDimensional);
  EXPECT_EQ(infinite_bounded_in_orbit(W("(3,2,1)")), 4u);
  // Two commuting dot-stabilizing reflections: no bounded weight in the orbit.
  EXPECT_EQ(infinite_bounded_in_orbit(W("(0,1,0,1)")), 0u);
}

TEST(GlClassify, OrbitCounts) {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> gap(0, 2);
  for (int n = 3; n <= 6; ++n) {
    for (int t = 0; t < 6; ++t) {
      // Dominant: a_i - a_{i+1} >= 0 regular, == -1 singular.
      std::vector<Scalar> reg(static_cast<size_t>(n)), sing(static_cast<size_t>(n)), dbl(static_cast<size_t>(n));
      long a = 0;
      std::uniform_int_distribution<int> at(1, n - 1);
      int s1 = at(rng);
      int s2 = s1 + 2 <= n - 1 ? s1 + 2 : s1 - 2;
      for (int i = n; i >= 1; --i) {
        reg[static_cast<size_t>(i - 1)] = Scalar(a);
        a += gap(rng);
      }
      for (int i = 1; i <= n; ++i) sing[static_cast<size_t>(i - 1)] = reg[static_cast<size_t>(i - 1)];
      // Lower the tail so that a_{s1} - a_{s1+1} = -1.
      Scalar shift = reg[static_cast<size_t>(s1 - 1)] - reg[static_cast<size_t>(s1)] + Scalar(1);
      for (int i = s1 + 1; i <= n; ++i) sing[static_cast<size_t>(i - 1)] += shift;
      Weight ls(sing);
      ASSERT_EQ(gl_maximal_info(ls).stabilizer, std::set<int>{s1}) << ls.str();
      EXPECT_EQ(infinite_bounded_in_orbit(Weight(reg)), static_cast<size_t>((n - 1) * (n - 1))) << Weight(reg).str();
      EXPECT_EQ(infinite_bounded_in_orbit(ls), static_cast<size_t>(n - 1)) << ls.str();
      if (n >= 4 && s2 >= 1) {
        dbl = sing;
        Scalar sh = dbl[static_cast<size_t>(s2 - 1)] - dbl[static_cast<size_t>(s2)] + Scalar(1);
        for (int i = s2 + 1; i <= n; ++i) dbl[static_cast<size_t>(i - 1)] += sh;
        Weight ld(dbl);
        ASSERT_EQ(gl_maximal_info(ld).stabilizer.size(), 2u) << ld.str();
        EXPECT_EQ(infinite_bounded_in_orbit(ld), 0u) << ld.str();
      }
    }
  }
}

TEST(GlClassify, QBoundedImpliesGlBounded) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> v(-3, 3);
  int q = 0;
  for (int t = 0; t < 3000; ++t) {
    int n = 3 + t % 3;
    std::vector<Scalar> c;
    for (int i = 0; i < n; ++i) c.push_back(Scalar(v(rng)));
    if (t % 3 == 0) c[static_cast<size_t>(t % n)] += Scalar::param("c");
    Weight mu(std::move(c));
    if (!classify(mu).bounded()) continue;
    ++q;
    EXPECT_TRUE(gl_classify(mu).bounded()) << mu.str();
  }
  EXPECT_GT(q, 100);
}

TEST(GlClassify, OneSidedDominantIsBounded) {
  std::mt19937 rng(57);
  std::uniform_int_distribution<int> v(-3, 3);
  int hits = 0;
  for (int t = 0; t < 5000; ++t) {
    int n = 3 + t % 3;
    std::vector<Scalar> c;
    for (int i = 0; i < n; ++i) c.push_back(Scalar(v(rng)));
    Weight mu(std::move(c));
    bool hyp = true;
    for (int i = 1; i <= n - 2; ++i) hyp = hyp && compare(dot(i, mu), mu) == Order::Less;
    if (!hyp) continue;
    ++hits;
    EXPECT_TRUE(gl_classify(mu).bounded()) << mu.str();
  }
  EXPECT_GT(hits, 100);
}

TEST(GlFamilies, RegularZero) {
  const Weight l = W("(0,0,0,0)");
  auto fs = gl_families(l);
  ASSERT_EQ(fs.size(), 3u);
  for (int k = 1; k <= 3; ++k) {
    const Family& f = fs[static_cast<size_t>(k - 1)];
    EXPECT_TRUE(f.dashed);
    EXPECT_EQ(f.regularities, std::vector<int>{k});
    bool entry = false;
    for (const auto& a : f.arrows)
      if (a.entry) {
        entry = true;
        EXPECT_EQ(a.from, l);
        EXPECT_EQ(a.to, dot(k, l));
        EXPECT_EQ(a.label, k);
      }
    EXPECT_TRUE(entry);
  }
}

TEST(GlFamilies, NonintegralBidirectional) {
  Family f = gl_family(W("(c,0,0,0)"));
  EXPECT_EQ(f.kind, Family::Kind::Nonintegral);
  ASSERT_EQ(f.members.size(), 4u);
  for (const auto& a : f.arrows) {
    EXPECT_TRUE(a.bidirectional);
    EXPECT_EQ(gl_arrow(a.from, a.label), a.to);
    EXPECT_EQ(gl_arrow(a.to, a.label), a.from);
  }
}

TEST(GlFamilies, SingularChain) {
  const Weight l = W("(0,1,0)");
  Family f = gl_family(l);
  EXPECT_EQ(f.kind, Family::Kind::Singular);
  ASSERT_EQ(f.members.size(), 2u);
  EXPECT_EQ(f.members[0].weight, l);
  EXPECT_EQ(dot(1, l), l);
}

TEST(GlArrow, RegularFamilySteps) {
  const Weight l = W("(0,0,0,0)");
  for (int k = 1; k + 1 <= 3; ++k) EXPECT_EQ(gl_arrow(dot(k, l), k + 1), dot(Word{k + 1, k}, l));
}

TEST(GlArrow, Reversal) {
  // Integral: the ascending arrow is undone by the arrow one label down.
  int checked = 0;
  for (const auto& f : gl_families(W("(2,1,0,-2)")))
    for (const auto& m : f.members)
      for (int i = 1; i <= 3; ++i) {
        Weight up;
        try {
          up = gl_arrow(m.weight, i);
        } catch (const DomainError&) {
          continue;
        }
        if (gl_position(gl_classify(up)) != gl_position(gl_classify(m.weight)) + 1) continue;
        ++checked;
        EXPECT_EQ(gl_arrow(up, i - 1), m.weight) << m.weight.str() << " i=" << i;
      }
  EXPECT_GT(checked, 0);
  // Nonintegral: arrows are involutive.
  Family f = gl_family(W("(c,1,0,0)"));
  for (const auto& a : f.arrows) EXPECT_EQ(gl_arrow(gl_arrow(a.from, a.label), a.label), a.from);
}

TEST(GlArrow, OutOfFamilyIsError) {
  ASSERT_FALSE(gl_classify(W("(0,1,2)")).bounded());
  EXPECT_THROW(gl_arrow(W("(0,1,2)"), 1), DomainError);
}
