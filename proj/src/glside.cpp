#include "starq/glside.hpp"

#include <algorithm>
#include <set>

#include "starq/error.hpp"

namespace starq {

namespace {

// mu - s_i . mu = (a_i - a_{i+1} + 1) alpha_i
Order dot_relation(const Weight& mu, SimpleIndex i) {
  auto d = diff_in_Z(mu[i] + 1, mu[i + 1]);
  if (!d) return Order::Incomparable;
  if (*d > 0) return Order::Greater;
  if (*d == 0) return Order::Equal;
  return Order::Less;
}

void extend(IncreasingString& cur, std::vector<IncreasingString>& out, std::size_t limit) {
  const Weight mu = cur.weights.back();
  bool any = false;
  for (int i = 1; i < mu.n(); ++i) {
    if (limit && out.size() >= limit) return;
    if (dot_relation(mu, i) != Order::Less) continue;
    any = true;
    cur.weights.push_back(dot(i, mu));
    cur.steps.push_back(i);
    extend(cur, out, limit);
    cur.weights.pop_back();
    cur.steps.pop_back();
  }
  if (!any) out.push_back(cur);
}

std::set<int> not_below(const Weight& mu) {
  std::set<int> s;
  for (int i = 1; i < mu.n(); ++i)
    if (dot_relation(mu, i) != Order::Greater) s.insert(i);
  return s;
}

Word reduced_singular_word(int i, int m) {
  Word w = product_word(i, m);
  w.pop_back();
  return w;
}

Word nonint_word(int m) {
  Word w;
  for (int j = m; j >= 1; --j) w.push_back(j);
  return w;
}

GlVerdict classify_integral(const Weight& mu) {
  GlVerdict v;
  if (gl_is_dominant(mu)) {
    v.kind = Verdict::Kind::FiniteDimensional;
    v.maximal = mu;
    return v;
  }
  auto strings = gl_increasing_strings(mu, 2);
  if (strings.size() != 1) {
    v.reason = UnboundedReason::MultipleStrings;
    return v;
  }
  const IncreasingString& s = strings.front();
  for (size_t j = 0; j + 1 < s.weights.size(); ++j) {
    if (!gl_maximal_info(s.weights[j]).stabilizer.empty()) {
      v.reason = UnboundedReason::StabilizedBelowTop;
      return v;
    }
  }
  MaximalInfo top = gl_maximal_info(s.top());
  if (top.stabilizer.size() > 1) {
    v.reason = UnboundedReason::StabilizerTooLarge;
    return v;
  }
  std::set<int> inj = not_below(mu);
  if (inj.size() != 1)
    throw std::logic_error("gl-bounded weight without a unique injective direction: " + mu.str());
  v.kind = Verdict::Kind::BoundedInfinite;
  v.cls = top.stabilizer.empty() ? WeightClass::Regular : WeightClass::Singular;
  v.type = TypeTag::integral(*inj.begin());
  v.maximal = s.top();
  v.word = s.word();
  if (v.cls == WeightClass::Regular) {
    v.family_id = "gl-regular:" + v.maximal.str() + ":" + std::to_string(v.word.back());
  } else {
    v.family_id = "gl-singular:" + v.maximal.str() + ":" + std::to_string(*top.stabilizer.begin());
  }
  return v;
}

GlVerdict classify_nonintegral(const Weight& mu) {
  const int n = mu.n();
  GlVerdict v;
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
  int m = (nonint.size() == 1 && lo == 1) ? 0 : lo;
  Word up;
  for (int j = 1; j <= m; ++j) up.push_back(j);
  Weight anchor = dot(up, mu);
  bool ok = !diff_in_Z(anchor[1], anchor[2]);
  for (int j = 2; ok && j < n; ++j) ok = dot_relation(anchor, j) == Order::Greater;
  if (!ok) {
    v.reason = UnboundedReason::AnchorNotMaximal;
    return v;
  }
  v.kind = Verdict::Kind::BoundedInfinite;
  v.cls = WeightClass::Nonintegral;
  v.type = TypeTag::nonint_at(m, n);
  v.maximal = anchor;
  v.word = nonint_word(m);
  v.family_id = "gl-nonintegral:" + anchor.str();
  return v;
}

BoundedEntry entry(const Weight& l, Word w, TypeTag t) {
  return {dot(w, l), t, std::move(w)};
}

// Adjacent members are joined both ways; the label is the target's type.
void chain_arrows(Family& fam) {
  for (size_t j = 0; j + 1 < fam.members.size(); ++j) {
    int t = static_cast<int>(j) + 1;
    fam.arrows.push_back({fam.members[j].weight, t + 1, fam.members[j + 1].weight, false, false});
    fam.arrows.push_back({fam.members[j + 1].weight, t, fam.members[j].weight, false, false});
  }
}

}  // namespace

std::vector<IncreasingString> gl_increasing_strings(const Weight& mu, std::size_t limit) {
  std::vector<IncreasingString> out;
  IncreasingString cur;
  cur.weights.push_back(mu);
  extend(cur, out, limit);
  return out;
}

bool gl_is_dominant(const Weight& l) {
  for (int i = 1; i < l.n(); ++i)
    if (dot_relation(l, i) != Order::Greater) return false;
  return true;
}

MaximalInfo gl_maximal_info(const Weight& l) {
  MaximalInfo info;
  info.is_maximal = true;
  for (int i = 1; i < l.n(); ++i) {
    Order o = dot_relation(l, i);
    if (o == Order::Less) info.is_maximal = false;
    if (o == Order::Equal) info.stabilizer.insert(i);
  }
  return info;
}

GlVerdict gl_classify(const Weight& mu) {
  return is_integral(mu) ? classify_integral(mu) : classify_nonintegral(mu);
}

Family gl_family(const Weight& l, int regularity) {
  const int n = l.n();
  Family fam;
  fam.anchor = l;
  fam.dashed = true;
  if (!is_integral(l)) {
    GlVerdict v = gl_classify(l);
    if (!v.bounded() || !v.word.empty())
      throw DomainError(ErrorCode::NotAnchor, "not a nonintegral type-1 gl anchor: " + l.str());
    fam.kind = Family::Kind::Nonintegral;
    for (int m = 0; m < n; ++m) fam.members.push_back(entry(l, nonint_word(m), TypeTag::nonint_at(m, n)));
    for (int m = 1; m < n; ++m)
      fam.arrows.push_back({fam.members[static_cast<size_t>(m - 1)].weight, m,
                            fam.members[static_cast<size_t>(m)].weight, true, false});
    return fam;
  }
  if (gl_is_dominant(l)) {
    if (regularity < 1 || regularity > n - 1)
      throw DomainError(ErrorCode::NotAnchor, "dominant anchor needs a regularity in 1..n-1");
    fam.kind = Family::Kind::RegularIntegral;
    fam.regularities = {regularity};
    for (int i = 1; i < n; ++i)
      fam.members.push_back(entry(l, product_word(i, regularity), TypeTag::integral(i)));
    chain_arrows(fam);
    fam.arrows.push_back({l, regularity,
                          fam.members[static_cast<size_t>(regularity - 1)].weight, false, true});
    return fam;
  }
  MaximalInfo info = gl_maximal_info(l);
  if (!info.is_maximal || info.stabilizer.size() != 1)
    throw DomainError(ErrorCode::NotAnchor, "not a gl family anchor: " + l.str());
  int m = *info.stabilizer.begin();
  fam.kind = Family::Kind::Singular;
  fam.singularity = m;
  for (int i = 1; i < n; ++i)
    fam.members.push_back(entry(l, reduced_singular_word(i, m), TypeTag::integral(i)));
  chain_arrows(fam);
  return fam;
}

std::vector<Family> gl_families(const Weight& l) {
  if (is_integral(l) && gl_is_dominant(l)) {
    std::vector<Family> out;
    for (int k = 1; k < l.n(); ++k) out.push_back(gl_family(l, k));
    return out;
  }
  return {gl_family(l, 0)};
}

int gl_position(const GlVerdict& v) {
  if (v.cls == WeightClass::Nonintegral) return static_cast<int>(v.word.size());
  return v.type->k;
}

Weight gl_arrow(const Weight& mu, SimpleIndex i) {
  const int n = mu.n();
  check_index(i, n);
  GlVerdict v = gl_classify(mu);
  if (v.kind == Verdict::Kind::FiniteDimensional) return dot(i, mu);
  if (!v.bounded()) throw DomainError(ErrorCode::NoArrow, "not gl-bounded: " + mu.str());
  if (v.cls == WeightClass::Nonintegral) {
    int p = gl_position(v);
    int q;
    if (i == p + 1) {
      q = p + 1;
    } else if (i == p && p >= 1) {
      q = p - 1;
    } else {
      throw DomainError(ErrorCode::NoArrow,
                        "no dashed " + std::to_string(i) + "-arrow at " + mu.str());
    }
    return dot(nonint_word(q), v.maximal);
  }
  int t = v.type->k;
  if (i != t - 1 && i != t + 1)
    throw DomainError(ErrorCode::NoArrow, "no dashed " + std::to_string(i) + "-arrow at " + mu.str());
  if (v.cls == WeightClass::Regular) return dot(product_word(i, v.word.back()), v.maximal);
  int m = *gl_maximal_info(v.maximal).stabilizer.begin();
  return dot(reduced_singular_word(i, m), v.maximal);
}

}  // namespace starq
