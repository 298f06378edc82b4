#include "starq/classify.hpp"

#include <algorithm>

#include "starq/error.hpp"
#include "starq/orbits.hpp"

namespace starq {

TypeTag TypeTag::nonint_at(int position, int n) {
  if (position == 0) return {Kind::Nonint1, 1};
  if (position == n - 1) return {Kind::NonintN1, n - 1};
  return {Kind::NonintPair, position};
}

std::set<int> TypeTag::injective_set(int n) const {
  switch (kind) {
    case Kind::Int: return {k};
    case Kind::Nonint1: return {1};
    case Kind::NonintN1: return {n - 1};
    case Kind::NonintPair: return {k, k + 1};
  }
  return {};
}

std::string TypeTag::str() const {
  switch (kind) {
    case Kind::Int: return "Int(" + std::to_string(k) + ")";
    case Kind::Nonint1: return "Nonint1";
    case Kind::NonintN1: return "NonintN1";
    case Kind::NonintPair:
      return "NonintPair(" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
  }
  return "?";
}

std::string TypeTag::gl_str() const {
  if (kind == Kind::NonintPair)
    return "NonintPair(" + std::to_string(k + 1) + "," + std::to_string(k) + ")";
  return str();
}

const char* class_name(WeightClass c) {
  switch (c) {
    case WeightClass::Regular: return "regular";
    case WeightClass::Singular: return "singular";
    case WeightClass::Nonintegral: return "nonintegral";
  }
  return "?";
}

const char* reason_name(UnboundedReason r) {
  switch (r) {
    case UnboundedReason::None: return "none";
    case UnboundedReason::MultipleStrings: return "multiple_strings";
    case UnboundedReason::StabilizedBelowTop: return "stabilized_below_top";
    case UnboundedReason::StabilizerTooLarge: return "stabilizer_too_large";
    case UnboundedReason::NonintegralShape: return "nonintegral_shape";
    case UnboundedReason::InjectiveSetMismatch: return "injective_set_mismatch";
    case UnboundedReason::AnchorNotMaximal: return "anchor_not_maximal";
  }
  return "?";
}

Word product_word(int i, int k) {
  Word w;
  if (i <= k) {
    for (int j = i; j <= k; ++j) w.push_back(j);
  } else {
    for (int j = i; j >= k; --j) w.push_back(j);
  }
  return w;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

// Regularities sharing one family with regularity k: the merged block
// f..f+z-2 when k falls inside it, otherwise {k}.
std::vector<int> regularity_block(const Weight& l, int k) {
  ZF zf = z_f(l);
  if (zf.z >= 2 && k >= zf.f && k <= zf.f + zf.z - 2) {
    std::vector<int> r;
    for (int j = zf.f; j <= zf.f + zf.z - 2; ++j) r.push_back(j);
    return r;
  }
  return {k};
}

std::set<int> not_below(const Weight& mu) {
  std::set<int> s;
  for (int i = 1; i < mu.n(); ++i)
    if (compare(mu, star(i, mu)) != Order::Greater) s.insert(i);
  return s;
}

Verdict classify_integral(const Weight& mu) {
  Verdict v;
  if (is_finite_dimensional(mu)) {
    v.kind = Verdict::Kind::FiniteDimensional;
    v.maximal = mu;
    return v;
  }
  auto strings = increasing_strings(mu, 2);
  if (strings.size() != 1) {
    v.reason = UnboundedReason::MultipleStrings;
    return v;
  }
  const IncreasingString& s = strings.front();
  for (size_t j = 0; j + 1 < s.weights.size(); ++j) {
    if (!maximal_info(s.weights[j]).stabilizer.empty()) {
      v.reason = UnboundedReason::StabilizedBelowTop;
      return v;
    }
  }
  MaximalInfo top = maximal_info(s.top());
  if (top.stabilizer.size() > 1) {
    v.reason = UnboundedReason::StabilizerTooLarge;
    return v;
  }
  std::set<int> inj = not_below(mu);
  if (inj.size() != 1)
    throw std::logic_error("bounded weight without a unique injective direction: " + mu.str());
  v.kind = Verdict::Kind::BoundedInfinite;
  v.cls = top.stabilizer.empty() ? WeightClass::Regular : WeightClass::Singular;
  v.type = TypeTag::integral(*inj.begin());
  v.maximal = s.top();
  v.word = s.word();
  if (v.cls == WeightClass::Regular) {
    v.family_id = "regular:" + v.maximal.str() + ":" + join(regularity_block(v.maximal, v.word.back()));
  } else {
    v.family_id = "singular:" + v.maximal.str() + ":" + std::to_string(*top.stabilizer.begin());
  }
  return v;
}

Verdict classify_nonintegral(const Weight& mu) {
  const int n = mu.n();
  Verdict v;
  std::set<int> nonint;
  for (int i = 1; i < n; ++i)
    if (!diff_in_Z(mu[i], mu[i + 1])) nonint.insert(i);
  int lo = *nonint.begin();
  bool shape = (nonint.size() == 1 && (lo == 1 || lo == n - 1)) ||
               (nonint.size() == 2 && *nonint.rbegin() == lo + 1);
  if (!shape) {
    v.reason = UnboundedReason::NonintegralShape;
    return v;
  }
  if (not_below(mu) != nonint) {
    v.reason = UnboundedReason::InjectiveSetMismatch;
    return v;
  }
  // Position of mu in its family: s_m ... s_1 * anchor.
  int m = (nonint.size() == 1 && lo == 1) ? 0 : lo;
  Word up;
  for (int j = 1; j <= m; ++j) up.push_back(j);
  Weight anchor = star(up, mu);
  bool ok = !diff_in_Z(anchor[1], anchor[2]);
  for (int j = 2; ok && j < n; ++j)
    ok = compare(anchor, star(j, anchor)) == Order::Greater;
  if (!ok) {
    v.reason = UnboundedReason::AnchorNotMaximal;
    return v;
  }
  v.kind = Verdict::Kind::BoundedInfinite;
  v.cls = WeightClass::Nonintegral;
  v.type = TypeTag::nonint_at(m, n);
  v.maximal = anchor;
  for (int j = m; j >= 1; --j) v.word.push_back(j);
  v.family_id = "nonintegral:" + anchor.str();
  return v;
}

void require_anchor(const Weight& l, MaximalInfo& info) {
  if (!is_integral(l)) throw DomainError(ErrorCode::NotIntegral, "not integral: " + l.str());
  info = maximal_info(l);
  if (!info.is_maximal) throw DomainError(ErrorCode::NotMaximal, "not W~-maximal: " + l.str());
  if (info.stabilizer.size() > 1)
    throw DomainError(ErrorCode::StabilizerTooLarge, "stabilizer has size >= 2: " + l.str());
}

// Reduced word for the type-i member of the singular family of m.
Word singular_word(int i, int m) {
  Word w = product_word(i, m);
  w.pop_back();
  return w;
}

BoundedEntry entry(const Weight& l, Word w, TypeTag t) {
  return {star(w, l), t, std::move(w)};
}

}  // namespace

Verdict classify(const Weight& mu) {
  return is_integral(mu) ? classify_integral(mu) : classify_nonintegral(mu);
}

std::vector<BoundedEntry> enumerate_bounded(const Weight& l) {
  MaximalInfo info;
  require_anchor(l, info);
  const int n = l.n();
  std::vector<BoundedEntry> out;
  if (!info.stabilizer.empty()) {
    int m = *info.stabilizer.begin();
    for (int i = 1; i < n; ++i) out.push_back(entry(l, singular_word(i, m), TypeTag::integral(i)));
    return out;
  }
  out.push_back({l, std::nullopt, {}});
  ZF zf = z_f(l);
  const int f = zf.f, z = zf.z;
  for (int i = 1; i < n; ++i) {
    for (int k = 1; k < n; ++k) {
      bool allowed = true;
      if (z >= 3) {
        if (i < k) allowed = k <= f || k >= f + z - 1;
        if (i > k) allowed = k <= f - 1 || k >= f + z - 2;
      }
      if (allowed) out.push_back(entry(l, product_word(i, k), TypeTag::integral(i)));
    }
  }
  return out;
}

std::string Family::id() const {
  const std::string prefix = dashed ? "gl-" : "";
  switch (kind) {
    case Kind::RegularIntegral: return prefix + "regular:" + anchor.str() + ":" + join(regularities);
    case Kind::Singular: return prefix + "singular:" + anchor.str() + ":" + std::to_string(singularity);
    case Kind::Nonintegral: return prefix + "nonintegral:" + anchor.str();
  }
  return "";
}

namespace {

// Arrows leaving the block lo..hi outward, labelled by the target's type.
void outward_arrows(Family& fam, int lo, int hi) {
  auto at = [&](int i) -> const Weight& { return fam.members[static_cast<size_t>(i - 1)].weight; };
  const int n = fam.anchor.n();
  for (int i = lo; i >= 2; --i) fam.arrows.push_back({at(i), i - 1, at(i - 1), false, false});
  for (int i = hi; i <= n - 2; ++i) fam.arrows.push_back({at(i), i + 1, at(i + 1), false, false});
}

Family regular_family(const Weight& l, int lo, int hi) {
  const int n = l.n();
  Family fam;
  fam.kind = Family::Kind::RegularIntegral;
  fam.anchor = l;
  for (int k = lo; k <= hi; ++k) fam.regularities.push_back(k);
  for (int i = 1; i < n; ++i) {
    Word w = i <= lo ? product_word(i, lo) : i >= hi ? product_word(i, hi) : Word{i};
    fam.members.push_back(entry(l, w, TypeTag::integral(i)));
  }
  auto at = [&](int i) -> const Weight& { return fam.members[static_cast<size_t>(i - 1)].weight; };
  for (int j = lo; j < hi; ++j) {
    fam.arrows.push_back({at(j), j + 1, at(j + 1), false, false});
    fam.arrows.push_back({at(j + 1), j, at(j), false, false});
  }
  outward_arrows(fam, lo, hi);
  for (int k = lo; k <= hi; ++k) fam.arrows.push_back({l, k, at(k), false, true});
  return fam;
}

}  // namespace

std::vector<Family> families(const Weight& l) {
  const int n = l.n();
  if (!is_integral(l)) {
    Verdict v = classify(l);
    if (!v.bounded() || !v.word.empty())
      throw DomainError(ErrorCode::NotAnchor, "not a nonintegral type-1 anchor: " + l.str());
    Family fam;
    fam.kind = Family::Kind::Nonintegral;
    fam.anchor = l;
    Word w;
    for (int m = 0; m < n; ++m) {
      if (m) w.insert(w.begin(), m);
      fam.members.push_back(entry(l, w, TypeTag::nonint_at(m, n)));
    }
    for (int m = 1; m < n; ++m)
      fam.arrows.push_back({fam.members[static_cast<size_t>(m - 1)].weight, m,
                            fam.members[static_cast<size_t>(m)].weight, true, false});
    return {fam};
  }
  MaximalInfo info;
  require_anchor(l, info);
  if (!info.stabilizer.empty()) {
    int m = *info.stabilizer.begin();
    Family fam;
    fam.kind = Family::Kind::Singular;
    fam.singularity = m;
    fam.anchor = l;
    for (int i = 1; i < n; ++i) fam.members.push_back(entry(l, singular_word(i, m), TypeTag::integral(i)));
    outward_arrows(fam, m, m);
    return {fam};
  }
  ZF zf = z_f(l);
  std::vector<Family> out;
  int lo = zf.z >= 2 ? zf.f : n;
  int hi = zf.z >= 2 ? zf.f + zf.z - 2 : n;
  for (int k = 1; k < n; ++k) {
    if (k == lo) {
      out.push_back(regular_family(l, lo, hi));
      k = hi;
    } else {
      out.push_back(regular_family(l, k, k));
    }
  }
  return out;
}

CuspidalAnchor validate_cuspidal(const CuspidalParams& p) {
  const int n = p.lambda.n();
  if (static_cast<int>(p.x.size()) != n - 1)
    throw DomainError(ErrorCode::LengthMismatch, "need n-1 twist parameters");
  Verdict v = classify(p.lambda);
  if (v.kind != Verdict::Kind::BoundedInfinite || !v.type ||
      v.type->injective_set(n) != std::set<int>{1} ||
      v.type->kind == TypeTag::Kind::NonintN1)
    throw DomainError(ErrorCode::NotTypeOne, "not a bounded weight of type 1: " + p.lambda.str());
  for (const auto& x : p.x)
    if (x.is_integer()) throw DomainError(ErrorCode::IntegralTwist, "integral twist " + x.str());
  Weight anchor = p.lambda;
  // alpha_1 + ... + alpha_i = eps_1 - eps_{i+1}
  for (int i = 1; i < n; ++i) {
    anchor[1] += p.x[static_cast<size_t>(i - 1)];
    anchor[i + 1] -= p.x[static_cast<size_t>(i - 1)];
  }
  return {anchor};
}

}  // namespace starq
