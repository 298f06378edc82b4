#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "starq/classify.hpp"
#include "starq/error.hpp"
#include "starq/orbits.hpp"
#include "print.hpp"

using namespace starq;

namespace {

Weight W(const char* s) { return parse_weight(s); }

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no DomainError";
  return ErrorCode::ParseError;
}

// Injective directions read off directly: i with s_i * mu not below mu.
std::set<int> injective_directions(const Weight& mu) {
  std::set<int> s;
  for (int i = 1; i < mu.n(); ++i)
    if (compare(star(i, mu), mu) != Order::Less) s.insert(i);
  return s;
}

void expect_verdict_invariants(const Weight& mu, const Verdict& v) {
  EXPECT_EQ(v.kind == Verdict::Kind::FiniteDimensional, is_finite_dimensional(mu)) << mu.str();
  if (v.kind == Verdict::Kind::BoundedInfinite) {
    EXPECT_EQ(star(v.word, v.maximal), mu) << mu.str();
    ASSERT_TRUE(v.type.has_value());
    EXPECT_EQ(v.type->injective_set(mu.n()), injective_directions(mu)) << mu.str();
  }
}

}  // namespace

TEST(Classify, KnownVerdicts) {
  Verdict a = classify(W("(1,-1,1,-1)"));
  EXPECT_EQ(a.kind, Verdict::Kind::BoundedInfinite);
  EXPECT_EQ(a.type, TypeTag::integral(2));
  EXPECT_EQ(a.maximal, W("(1,0,0,-1)"));

  Verdict b = classify(W("(c,-c,c)"));
  EXPECT_EQ(b.kind, Verdict::Kind::BoundedInfinite);
  EXPECT_EQ(b.cls, WeightClass::Nonintegral);
  EXPECT_EQ(b.type, (TypeTag{TypeTag::Kind::NonintPair, 1}));
  EXPECT_EQ(b.maximal, W("(-c-1,c+1,c)"));

  EXPECT_EQ(classify(W("(2,0,0,0)")).kind, Verdict::Kind::FiniteDimensional);

  Verdict d = classify(W("(-1,0,1)"));
  EXPECT_EQ(d.kind, Verdict::Kind::Unbounded);
  EXPECT_EQ(d.reason, UnboundedReason::MultipleStrings);

  Verdict e = classify(W("(0,0,0,1,0,-1,-2)"));
  EXPECT_EQ(e.kind, Verdict::Kind::BoundedInfinite);
  EXPECT_EQ(e.type, TypeTag::integral(3));
  EXPECT_EQ(e.maximal, W("(1,0,0,0,0,-1,-2)"));
  EXPECT_EQ(e.word, parse_word("s3 s2 s1"));

  Verdict f = classify(W("(0,2,0)"));
  EXPECT_EQ(f.type, TypeTag::integral(1));
  EXPECT_EQ(f.maximal, W("(2,0,0)"));
}

TEST(Classify, ShiftedCounterexampleDerived) {
  // s_1 . (c,-c,c-1) = (-c-1,c+1,c-1) has nonintegral first gap and s_2 * it
  // lies below it, so the weight is the type-(1,2) member over that anchor.
  const Weight mu = W("(c,-c,c-1)");
  const Weight anchor = W("(-c-1,c+1,c-1)");
  EXPECT_EQ(dot(1, mu), anchor);
  EXPECT_EQ(star(1, anchor), mu);
  EXPECT_EQ(compare(star(2, anchor), anchor), Order::Less);
  EXPECT_EQ(compare(star(1, mu), mu), Order::Incomparable);
  Verdict v = classify(mu);
  EXPECT_EQ(v.kind, Verdict::Kind::BoundedInfinite);
  EXPECT_EQ(v.maximal, anchor);
  Verdict w = classify(W("(c,-c,c+1)"));
  EXPECT_EQ(w.kind, Verdict::Kind::Unbounded);
  EXPECT_EQ(w.reason, UnboundedReason::AnchorNotMaximal);
}

TEST(Classify, StabilizerTooLarge) {
  Verdict v = classify(W("(-1/2,1/2,-1/2,1/2)"));
  EXPECT_FALSE(v.bounded());
}

TEST(Enumerate, RegularRankTwo) {
  const Weight l = W("(3,2,1)");
  auto es = enumerate_bounded(l);
  std::set<Weight> got;
  for (const auto& e : es) got.insert(e.weight);
  std::set<Weight> want{l};
  for (const char* w : {"s1", "s2", "s2 s1", "s1 s2"}) want.insert(star(parse_word(w), l));
  EXPECT_EQ(es.size(), 5u);
  EXPECT_EQ(got, want);
  // Brute force: inside the orbit the bounded weights are exactly those
  // with a unique increasing string whose top has at most one loop.
  std::set<Weight> brute;
  OrbitGraph g = orbit(l, 100);
  for (const auto& v : g.vertices) {
    auto ss = increasing_strings(v);
    if (ss.size() == 1 && maximal_info(ss[0].top()).stabilizer.size() <= 1) {
      bool all_loops_ok = true;
      for (size_t j = 0; j + 1 < ss[0].weights.size(); ++j)
        all_loops_ok = all_loops_ok && maximal_info(ss[0].weights[j]).stabilizer.empty();
      if (all_loops_ok) brute.insert(v);
    }
  }
  EXPECT_EQ(brute, want);
}

TEST(Enumerate, Errors) {
  EXPECT_EQ(error_of([] { enumerate_bounded(W("(-1/2,1/2,1/2)")); }), ErrorCode::StabilizerTooLarge);
  EXPECT_EQ(error_of([] { enumerate_bounded(W("(-1,0,1)")); }), ErrorCode::NotMaximal);
  EXPECT_EQ(error_of([] { enumerate_bounded(W("(c,0,0)")); }), ErrorCode::NotIntegral);
}

TEST(Enumerate, TablePerType) {
  auto es = enumerate_bounded(W("(1,0,0,0,0,-1,-2)"));
  EXPECT_EQ(es.size(), 25u);
  std::map<int, int> per;
  for (const auto& e : es)
    if (e.type) ++per[e.type->k];
  EXPECT_EQ(per.size(), 6u);
  for (const auto& [k, m] : per) EXPECT_EQ(m, 4) << "type " << k;
}

TEST(Enumerate, ProductWord) {
  EXPECT_EQ(product_word(1, 3), (Word{1, 2, 3}));
  EXPECT_EQ(product_word(3, 1), (Word{3, 2, 1}));
  EXPECT_EQ(product_word(2, 2), (Word{2}));
}

TEST(Families, RankTwoRegular) {
  auto fs = families(W("(3,2,1)"));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].regularities, std::vector<int>{1});
  EXPECT_EQ(fs[1].regularities, std::vector<int>{2});
  for (const auto& f : fs) EXPECT_EQ(f.members.size(), 2u);
}

TEST(Families, NonintegralChain) {
  const Weight l = W("(c,0,0,0)");
  auto fs = families(l);
  ASSERT_EQ(fs.size(), 1u);
  const Family& f = fs[0];
  EXPECT_EQ(f.kind, Family::Kind::Nonintegral);
  std::vector<Weight> want{l};
  for (const char* w : {"s1", "s2 s1", "s3 s2 s1"}) want.push_back(star(parse_word(w), l));
  ASSERT_EQ(f.members.size(), 4u);
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(f.members[i].weight, want[i]);
    EXPECT_EQ(f.members[i].type, TypeTag::nonint_at(static_cast<int>(i), 4));
  }
  EXPECT_EQ(f.arrows.size(), 3u);
  for (const auto& a : f.arrows) EXPECT_TRUE(a.bidirectional);
}

TEST(Families, Singular) {
  auto fs = families(W("(2,2,1,0)"));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].kind, Family::Kind::Singular);
  EXPECT_EQ(fs[0].singularity, 1);
  EXPECT_EQ(fs[0].members.size(), 3u);
}

TEST(Families, OneMemberPerType) {
  for (const char* s : {"(1,0,0,0,0,-1,-2)", "(3,2,1)", "(0,0,0,0)", "(2,0,0,-1,-3)", "(1,1,0)", "(c,1,0)"}) {
    for (const auto& f : families(W(s))) {
      std::set<std::string> types;
      for (const auto& m : f.members) types.insert(m.type->str());
      EXPECT_EQ(types.size(), f.members.size()) << s;
      // Nonintegral chains carry n members, integral families n-1.
      EXPECT_EQ(static_cast<int>(f.members.size()), W(s).n() - (f.kind == Family::Kind::Nonintegral ? 0 : 1)) << s;
    }
  }
}

TEST(Cuspidal, Validate) {
  CuspidalAnchor a = validate_cuspidal({W("(0,2,0)"), {Scalar(Rational(1, 2)), Scalar(Rational(1, 2))}});
  EXPECT_EQ(a.anchor, W("(1,3/2,-1/2)"));
  EXPECT_EQ(error_of([] { validate_cuspidal({W("(0,2,0)"), {Scalar(1), parse_scalar("c")}}); }),
            ErrorCode::IntegralTwist);
  EXPECT_EQ(error_of([] { validate_cuspidal({W("(2,0,0)"), {parse_scalar("c"), parse_scalar("d")}}); }),
            ErrorCode::NotTypeOne);
}

TEST(ClassifyProperty, GridInvariants) {
  for (int n = 3; n <= 4; ++n) {
    std::vector<int> c(static_cast<size_t>(n), -2);
    while (true) {
      Weight mu(std::vector<Scalar>(c.begin(), c.end()));
      expect_verdict_invariants(mu, classify(mu));
      int i = 0;
      while (i < n && c[static_cast<size_t>(i)] == 2) c[static_cast<size_t>(i++)] = -2;
      if (i == n) break;
      ++c[static_cast<size_t>(i)];
    }
  }
}

TEST(ClassifyProperty, NonintegralInjectiveSets) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> v(-3, 3), pos(0, 3);
  int bounded = 0;
  for (int t = 0; t < 4000; ++t) {
    std::vector<Scalar> c;
    int p = pos(rng);
    for (int i = 0; i < 4; ++i) c.push_back(i == p ? Scalar::param("c") + Scalar(v(rng)) : Scalar(v(rng)));
    Weight mu(std::move(c));
    Verdict r = classify(mu);
    expect_verdict_invariants(mu, r);
    bounded += r.bounded();
  }
  EXPECT_GT(bounded, 50);
}

TEST(ClassifyProperty, IotaDuality) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> v(-3, 3);
  for (int t = 0; t < 2000; ++t) {
    int n = 3 + t % 3;
    std::vector<Scalar> c;
    for (int i = 0; i < n; ++i) c.push_back(Scalar(v(rng)));
    if (t % 4 == 0) c[0] += Scalar::param("c");
    Weight mu(std::move(c));
    Verdict a = classify(mu), b = classify(iota(mu));
    EXPECT_EQ(a.bounded(), b.bounded()) << mu.str();
    if (a.type && a.type->kind == TypeTag::Kind::Int) EXPECT_EQ(b.type, TypeTag::integral(n - a.type->k)) << mu.str();
  }
}
