#include <gtest/gtest.h>

#include <map>
#include <random>

#include "starq/decomp.hpp"
#include "starq/error.hpp"
#include "starq/glside.hpp"
#include "print.hpp"

using namespace starq;

namespace {

Weight W(const char* s) { return parse_weight(s); }

// Number of Gelfand-Tsetlin patterns with top row l (weakly decreasing):
// the dimension of the gl_m module of highest weight l.
long gt_count(const std::vector<long>& l) {
  static std::map<std::vector<long>, long> memo;
  if (l.size() <= 1) return 1;
  if (auto it = memo.find(l); it != memo.end()) return it->second;
  long total = 0;
  std::vector<long> row(l.size() - 1);
  auto rec = [&](auto& self, size_t i) -> void {
    if (i == row.size()) {
      total += gt_count(row);
      return;
    }
    for (long v = l[i + 1]; v <= l[i]; ++v) {
      row[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return memo[l] = total;
}

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::set<Weight> weights_of(const JHSet& s) {
  std::set<Weight> out;
  for (const auto& e : s.entries) out.insert(e.weight);
  return out;
}

}  // namespace

TEST(LeviDim, Examples) {
  EXPECT_EQ(levi_dim(W("(0,0,-1,1)")), 3);
  EXPECT_EQ(levi_dim(W("(0,0,0,c)")), 1);
  EXPECT_EQ(levi_dim(W("(0,-1,-1,2)")), 3);
}

TEST(LeviDim, GelfandTsetlinOracle) {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> gap(0, 3), base(-4, 4);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + t % 4;
    std::vector<long> top(static_cast<size_t>(n - 1));
    long a = base(rng);
    for (int i = n - 2; i >= 0; --i) {
      top[static_cast<size_t>(i)] = a;
      a += gap(rng);
    }
    std::vector<Scalar> c(top.begin(), top.end());
    c.push_back(Scalar(base(rng)));
    Weight mu(c);
    EXPECT_EQ(levi_dim(mu), gt_count(top)) << mu.str();
    // A common parameter shift leaves the dimension unchanged.
    std::vector<Scalar> d = c;
    for (size_t i = 0; i + 1 < d.size(); ++i) d[i] += Scalar::param("c");
    EXPECT_EQ(levi_dim(Weight(d)), gt_count(top));
  }
}

TEST(Degree, BinomialFamily) {
  // (0..0, -1 x m, c+m) with c = 2, n = 4: degrees C(3, m).
  const std::vector<const char*> ws = {"(0,0,0,2)", "(0,0,-1,3)", "(0,-1,-1,4)", "(-1,-1,-1,5)"};
  for (size_t m = 0; m < ws.size(); ++m) EXPECT_EQ(degree_type_n1(W(ws[m])), binom(3, static_cast<long>(m))) << ws[m];
}

TEST(Degree, ZeroFamilyN4) {
  const Weight zero = W("(0,0,0,0)");
  EXPECT_EQ(degree_type_n1(dot(parse_word("s3 s2 s1"), zero)), 1);
  EXPECT_EQ(degree_type_n1(dot(parse_word("s3 s2"), zero)), 2);
  EXPECT_EQ(degree_type_n1(dot(parse_word("s3"), zero)), 1);
}

TEST(Degree, ZeroFamilyClosedForm) {
  // deg of s_{n-1}...s_i . 0 is C(n-1,i) - C(n-1,i+1) + ...
  for (int n = 3; n <= 8; ++n) {
    mpz_class sum = 0;
    for (int i = 1; i <= n - 1; ++i) {
      Word w;
      for (int j = n - 1; j >= i; --j) w.push_back(j);
      mpz_class want = 0;
      for (int j = i; j <= n - 1; ++j) want += ((j - i) % 2 ? -1 : 1) * binom(n - 1, j);
      mpz_class d = degree_type_n1(dot(w, zero_weight(n)));
      EXPECT_EQ(d, want) << "n=" << n << " i=" << i;
      sum += d;
    }
    EXPECT_EQ(sum, mpz_class(1) << (n - 2)) << n;
  }
}

TEST(Degree, WrongTypeRejected) {
  EXPECT_THROW(degree_type_n1(W("(1,2,3)")), DomainError);
  EXPECT_THROW(degree_type_n1(W("(-1,1,0,0)")), DomainError);
}

TEST(JH, RowsN4) {
  const Weight l = W("(2,0,0,0)");
  auto pick = [&](const char* d, const char* s) { return dot(parse_word(d), star(parse_word(s), l)); };
  EXPECT_EQ(weights_of(jh_c_eps1(4, Scalar(2), 3)),
            (std::set<Weight>{pick("e", "s3 s2 s1"), pick("s3", "s2 s1"), pick("s3 s2", "s1"), pick("s3 s2 s1", "e")}));
  EXPECT_EQ(weights_of(jh_c_eps1(4, Scalar(2), 1)),
            (std::set<Weight>{pick("s1 s3", "s3 s2 s1"), pick("s2", "s2 s1"), pick("e", "s1"), pick("s1", "e")}));
  const Scalar c = Scalar::param("c");
  const Weight mu = W("(0,0,0,c)");
  auto a = [](int i) { return simple_root(4, i); };
  EXPECT_EQ(weights_of(jh_c_eps1(4, c, 3)),
            (std::set<Weight>{mu, mu - a(3), mu - a(2) - Rational(2) * a(3),
                              mu - a(1) - Rational(2) * a(2) - Rational(3) * a(3)}));
  for (int k = 0; k < 4; ++k)
    for (const auto& e : jh_c_eps1(4, c, k).entries) EXPECT_EQ(e.multiplicity, 2);
}

TEST(JH, ZeroFamilyAllN) {
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      std::set<Weight> want;
      for (int i = 1; i <= n - 1; ++i) want.insert(dot(product_word(k, i), zero_weight(n)));
      JHSet s = jh_c_eps1(n, Scalar(0), k);
      EXPECT_EQ(weights_of(s), want) << "n=" << n << " k=" << k;
      for (const auto& e : s.entries) EXPECT_EQ(e.multiplicity, 2);
    }
}

TEST(JH, DistinctAndClosedMatchesPropagated) {
  for (int n = 3; n <= 6; ++n)
    for (const char* cs : {"1", "2", "3", "-1", "-2", "0", "c", "c/2+1/3"}) {
      Scalar c = parse_scalar(cs);
      for (int k = 0; k < n; ++k) {
        JHSet a = jh_c_eps1(n, c, k), b = jh_c_eps1_direct(n, c, k);
        EXPECT_TRUE(a.distinct()) << n << " " << cs << " " << k;
        EXPECT_TRUE(a.same_multiset(b)) << n << " " << cs << " " << k;
      }
    }
}

TEST(JH, DegreeSums) {
  for (int n = 3; n <= 8; ++n) {
    mpz_class s = 0;
    for (const auto& e : jh_c_eps1(n, Scalar(2), n - 1).entries) s += e.multiplicity * degree_type_n1(e.weight);
    EXPECT_EQ(s, mpz_class(1) << n) << n;
  }
}

TEST(Propagate, Steps) {
  EXPECT_TRUE(propagate_jh(jh_c_eps1(4, Scalar(2), 2), 3).same_multiset(jh_c_eps1(4, Scalar(2), 3)));
  EXPECT_TRUE(propagate_jh(JHSet{}, 2).entries.empty());
  const Scalar c = Scalar::param("c");
  for (int k = 0; k + 1 < 4; ++k) {
    JHSet s = jh_c_eps1(4, c, k);
    JHSet up = propagate_jh(s, k + 1);
    EXPECT_TRUE(up.same_multiset(jh_c_eps1(4, c, k + 1)));
    EXPECT_TRUE(propagate_jh(up, k + 1, Direction::Reverse).same_multiset(s));
  }
  // Reversal in the ascending direction for integral families.
  EXPECT_TRUE(propagate_jh(jh_c_eps1(4, Scalar(2), 3), 3, Direction::Reverse).same_multiset(jh_c_eps1(4, Scalar(2), 2)));
}

TEST(Propagate, CKindAndWeights) {
  EXPECT_EQ(c_kind(Scalar(2)), CKind::Positive);
  EXPECT_EQ(c_kind(Scalar(-1)), CKind::Negative);
  EXPECT_EQ(c_kind(Scalar(0)), CKind::Zero);
  EXPECT_EQ(c_kind(parse_scalar("c")), CKind::Nonintegral);
  EXPECT_EQ(c_kind(parse_scalar("1/2")), CKind::Nonintegral);
  EXPECT_EQ(c_family_weight(4, Scalar(2), 0), W("(2,0,0,0)"));
  EXPECT_EQ(c_family_weight(4, Scalar(2), 2), W("(0,0,2,0)"));
  EXPECT_EQ(c_family_weight(4, Scalar(-2), 0), W("(0,0,0,-2)"));
}
