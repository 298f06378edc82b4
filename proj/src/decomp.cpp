#include "starq/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "starq/error.hpp"
#include "starq/glside.hpp"

namespace starq {

const char* const kDegreeConvention =
    "regular integral mu = s_{n-1}...s_k . eta: sum over i=k+1..n of "
    "(-1)^(i-k-1) levi_dim(s_{n-1}...s_i . eta), the i=n term being levi_dim(eta); "
    "singular or nonintegral mu: levi_dim(mu)";

bool JHSet::same_multiset(const JHSet& o) const {
  auto key = [](const JHSet& s) {
    std::vector<std::pair<Weight, int>> v;
    for (const auto& e : s.entries) v.emplace_back(e.weight, e.multiplicity);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(*this) == key(o);
}

bool JHSet::distinct() const {
  std::set<Weight> seen;
  for (const auto& e : entries)
    if (!seen.insert(e.weight).second) return false;
  return true;
}

mpz_class levi_dim(const Weight& mu) {
  const int m = mu.n() - 1;
  for (int i = 1; i < m; ++i) {
    auto d = diff_in_Z(mu[i], mu[i + 1]);
    if (!d || *d < 0) throw DomainError(ErrorCode::NotDominant, "Levi part not dominant: " + mu.str());
  }
  mpz_class num = 1, den = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      num *= *diff_in_Z(mu[i], mu[j]) + (j - i);
      den *= j - i;
    }
  if (num % den != 0) throw std::logic_error("non-integral Weyl dimension");
  return num / den;
}

mpz_class degree_type_n1(const Weight& mu) {
  const int n = mu.n();
  GlVerdict v = gl_classify(mu);
  bool ok = v.kind == Verdict::Kind::BoundedInfinite && v.type &&
            v.type->kind != TypeTag::Kind::Nonint1 && v.type->injective_set(n) == std::set<int>{n - 1};
  if (!ok) throw DomainError(ErrorCode::WrongType, "not gl-bounded of type n-1: " + mu.str());
  if (v.cls != WeightClass::Regular) return levi_dim(mu);
  const int k = v.word.back();
  if (v.word != product_word(n - 1, k)) throw std::logic_error("unexpected normal form for " + mu.str());
  mpz_class deg = 0;
  for (int i = k + 1; i <= n; ++i) {
    Word w = i <= n - 1 ? product_word(n - 1, i) : Word{};
    mpz_class term = levi_dim(dot(w, v.maximal));
    deg += (i - k - 1) % 2 == 0 ? term : mpz_class(-term);
  }
  return deg;
}

CKind c_kind(const Scalar& c) {
  if (!c.is_integer()) return CKind::Nonintegral;
  if (c.rational() > 0) return CKind::Positive;
  if (c.rational() < 0) return CKind::Negative;
  return CKind::Zero;
}

namespace {

Word descending(int hi, int lo) {  // s_hi s_{hi-1} ... s_lo, empty if hi < lo
  Word w;
  for (int j = hi; j >= lo; --j) w.push_back(j);
  return w;
}

Word ascending(int lo, int hi) {  // s_lo s_{lo+1} ... s_hi, empty if hi < lo
  Word w;
  for (int j = lo; j <= hi; ++j) w.push_back(j);
  return w;
}

void check_k(int n, int k) {
  if (n < 2 || k < 0 || k > n - 1)
    throw DomainError(ErrorCode::BadShape, "need n >= 2 and 0 <= k <= n-1");
}

JHSet make(const std::vector<Weight>& ws, int mult = 2) {
  JHSet s;
  for (const auto& w : ws) s.entries.push_back({w, mult});
  return s;
}

// c > 0 or nonintegral: s_{n-1}...s_i . s_{i-1}...s_1 * (c eps_1), i = 1..n
JHSet top_set(int n, const Scalar& c) {
  Weight l = c * epsilon(n, 1);
  std::vector<Weight> ws;
  for (int i = 1; i <= n; ++i) ws.push_back(dot(descending(n - 1, i), star(descending(i - 1, 1), l)));
  return make(ws);
}

// c < 0: s_1...s_{i-1} . s_i...s_{n-1} * (c eps_n), i = 1..n
JHSet bottom_set(int n, const Scalar& c) {
  Weight l = c * epsilon(n, n);
  std::vector<Weight> ws;
  for (int i = 1; i <= n; ++i) ws.push_back(dot(ascending(1, i - 1), star(ascending(i, n - 1), l)));
  return make(ws);
}

// c = 0: prod_{j=k}^{i} s_j . 0, i = 1..n-1
JHSet zero_set(int n, int k) {
  std::vector<Weight> ws;
  for (int i = 1; i < n; ++i) ws.push_back(dot(product_word(k, i), zero_weight(n)));
  return make(ws);
}

// Finite-dimensional eta whose entry arrow eta --e--> s_e . eta lands in s.
JHSet fd_preimages(const JHSet& s, int e) {
  std::vector<Weight> ws;
  for (const auto& en : s.entries) {
    GlVerdict v = gl_classify(en.weight);
    if (v.kind == Verdict::Kind::BoundedInfinite && v.cls == WeightClass::Regular && v.word == Word{e})
      ws.push_back(v.maximal);
  }
  return make(ws);
}

std::vector<Weight> dot_orbit(const Weight& mu) {
  const int n = mu.n();
  std::vector<Scalar> shifted;
  for (int i = 1; i <= n; ++i) shifted.push_back(mu[i] + Scalar(n - i));
  std::sort(shifted.begin(), shifted.end());
  std::vector<Weight> out;
  do {
    std::vector<Scalar> c;
    for (int i = 1; i <= n; ++i) c.push_back(shifted[static_cast<size_t>(i - 1)] - Scalar(n - i));
    out.emplace_back(std::move(c));
  } while (std::next_permutation(shifted.begin(), shifted.end()));
  return out;
}

// {mu of type t : mu --label--> mu' for some mu' in s}, by orbit search.
JHSet set_builder(const JHSet& s, int t, int label) {
  std::set<Weight> found;
  for (const auto& en : s.entries) {
    for (const auto& w : dot_orbit(en.weight)) {
      GlVerdict v = gl_classify(w);
      if (v.kind != Verdict::Kind::BoundedInfinite || !(v.type == TypeTag::integral(t))) continue;
      if (gl_arrow(w, label) == en.weight) found.insert(w);
    }
  }
  return make(std::vector<Weight>(found.begin(), found.end()));
}

// Finite-dimensional eta in the dot orbits of s with s_e . eta in s.
JHSet fd_set_builder(const JHSet& s, int e) {
  std::set<Weight> found;
  for (const auto& en : s.entries)
    for (const auto& w : dot_orbit(en.weight))
      if (gl_is_dominant(w) && dot(e, w) == en.weight) found.insert(w);
  return make(std::vector<Weight>(found.begin(), found.end()));
}

}  // namespace

Weight c_family_weight(int n, const Scalar& c, int k) {
  check_k(n, k);
  switch (c_kind(c)) {
    case CKind::Negative: return star(ascending(k == 0 ? n : k, n - 1), c * epsilon(n, n));
    case CKind::Zero: return k == 0 ? zero_weight(n) : star(k, zero_weight(n));
    default: return star(descending(k, 1), c * epsilon(n, 1));
  }
}

JHSet jh_c_eps1(int n, const Scalar& c, int k) {
  check_k(n, k);
  switch (c_kind(c)) {
    case CKind::Positive: {
      JHSet s = top_set(n, c);
      for (int j = n - 2; j >= std::max(k, 1); --j) s = propagate_jh(s, j);
      return k == 0 ? fd_preimages(s, 1) : s;
    }
    case CKind::Nonintegral: {
      JHSet s = top_set(n, c);
      for (int j = n - 2; j >= k; --j) s = propagate_jh(s, j + 1);
      return s;
    }
    case CKind::Negative: {
      JHSet s = bottom_set(n, c);
      int upto = k == 0 ? n - 1 : k;
      for (int j = 2; j <= upto; ++j) s = propagate_jh(s, j);
      return k == 0 ? fd_preimages(s, n - 1) : s;
    }
    case CKind::Zero: {
      if (k == 0) return make({zero_weight(n)}, 1);
      JHSet s = zero_set(n, n - 1);
      for (int j = n - 2; j >= k; --j) s = propagate_jh(s, j);
      return s;
    }
  }
  return {};
}

JHSet jh_c_eps1_direct(int n, const Scalar& c, int k) {
  check_k(n, k);
  switch (c_kind(c)) {
    case CKind::Positive: {
      JHSet s = top_set(n, c);
      for (int j = n - 2; j >= std::max(k, 1); --j) s = set_builder(s, j, j + 1);
      return k == 0 ? fd_set_builder(s, 1) : s;
    }
    case CKind::Nonintegral: {
      JHSet top = top_set(n, c);
      if (k == n - 1) return top;
      JHSet s;
      for (const auto& e : top.entries) s.entries.push_back({dot(ascending(k + 1, n - 1), e.weight), 2});
      return s;
    }
    case CKind::Negative: {
      JHSet s = bottom_set(n, c);
      int upto = k == 0 ? n - 1 : k;
      for (int j = 2; j <= upto; ++j) s = set_builder(s, j, j - 1);
      return k == 0 ? fd_set_builder(s, n - 1) : s;
    }
    case CKind::Zero:
      return k == 0 ? make({zero_weight(n)}, 1) : zero_set(n, k);
  }
  return {};
}

JHSet propagate_jh(const JHSet& s, SimpleIndex i, Direction dir) {
  JHSet out;
  for (const auto& e : s.entries) {
    Weight w;
    if (dir == Direction::Forward) {
      w = gl_arrow(e.weight, i);
    } else {
      bool integral = is_integral(e.weight);
      if (integral && i < 2)
        throw DomainError(ErrorCode::NoArrow, "no reversal of the 1-arrow for integral weights");
      w = gl_arrow(e.weight, integral ? i - 1 : i);
      if (!(gl_arrow(w, i) == e.weight))
        throw DomainError(ErrorCode::NoArrow, "reversal rule fails at " + e.weight.str());
    }
    out.entries.push_back({w, e.multiplicity});
  }
  return out;
}

std::string jh_table_text(int n, const Scalar& c, const std::vector<int>& ks) {
  std::vector<std::string> heads;
  std::vector<std::vector<std::string>> cells;
  size_t head_w = 0;
  std::vector<size_t> col_w;
  for (int k : ks) {
    heads.push_back("L" + c_family_weight(n, c, k).str());
    head_w = std::max(head_w, heads.back().size());
    std::vector<std::string> row;
    for (const auto& e : jh_c_eps1(n, c, k).entries)
      row.push_back(e.weight.str() + "^" + std::to_string(e.multiplicity));
    for (size_t j = 0; j < row.size(); ++j) {
      if (col_w.size() <= j) col_w.push_back(0);
      col_w[j] = std::max(col_w[j], row[j].size());
    }
    cells.push_back(std::move(row));
  }
  std::string out;
  for (size_t r = 0; r < heads.size(); ++r) {
    std::string line = heads[r] + std::string(head_w - heads[r].size(), ' ') + " =";
    for (size_t j = 0; j < cells[r].size(); ++j) {
      line += "  " + cells[r][j];
      if (j + 1 < cells[r].size()) line += std::string(col_w[j] - cells[r][j].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace starq
