#include "starq/weights.hpp"

#include <cctype>

#include "starq/error.hpp"

namespace starq {

Weight::Weight(std::vector<Scalar> coords) : c_(std::move(coords)) {
  if (c_.size() < 2) throw DomainError(ErrorCode::BadShape, "weights need n >= 2");
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.n() != n()) throw DomainError(ErrorCode::LengthMismatch, "length mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.n() != n()) throw DomainError(ErrorCode::LengthMismatch, "length mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight operator*(const Rational& q, Weight a) {
  for (auto& x : a.c_) x *= q;
  return a;
}

Weight operator*(const Scalar& s, Weight a) {
  // Only rational multiples of a weight with formal entries make sense, or
  // formal multiples of a rational weight.
  for (auto& x : a.c_) {
    if (s.is_rational()) {
      x *= s.rational();
    } else if (x.is_rational()) {
      x = s * x.rational();
    } else {
      throw DomainError(ErrorCode::BadShape, "product of two parameters");
    }
  }
  return a;
}

std::string Weight::str() const {
  std::string out = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out + ")";
}

void check_index(SimpleIndex i, int n) {
  if (i < 1 || i > n - 1)
    throw DomainError(ErrorCode::BadShape,
                      "simple index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(n - 1));
}

Weight zero_weight(int n) { return Weight(std::vector<Scalar>(static_cast<size_t>(n))); }

Weight epsilon(int n, int i) {
  Weight w = zero_weight(n);
  w[i] = 1;
  return w;
}

Weight simple_root(int n, int i) {
  Weight w = zero_weight(n);
  w[i] = 1;
  w[i + 1] = -1;
  return w;
}

Weight reflect(SimpleIndex i, const Weight& l) {
  check_index(i, l.n());
  Weight r = l;
  std::swap(r[i], r[i + 1]);
  return r;
}

Weight dot(SimpleIndex i, const Weight& l) {
  check_index(i, l.n());
  Weight r = l;
  r[i] = l[i + 1] - 1;
  r[i + 1] = l[i] + 1;
  return r;
}

Weight star(SimpleIndex i, const Weight& l) {
  check_index(i, l.n());
  if ((l[i] + l[i + 1]).is_zero()) return dot(i, l);
  return reflect(i, l);
}

template <class F>
static Weight apply_word(const Word& w, Weight l, F f) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) l = f(*it, l);
  return l;
}

Weight reflect(const Word& w, const Weight& l) {
  return apply_word(w, l, [](int i, const Weight& x) { return reflect(i, x); });
}
Weight dot(const Word& w, const Weight& l) {
  return apply_word(w, l, [](int i, const Weight& x) { return dot(i, x); });
}
Weight star(const Word& w, const Weight& l) {
  return apply_word(w, l, [](int i, const Weight& x) { return star(i, x); });
}

const char* order_name(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

Order flip(Order o) {
  if (o == Order::Less) return Order::Greater;
  if (o == Order::Greater) return Order::Less;
  return o;
}

Order compare(const Weight& mu, const Weight& nu) {
  if (mu.n() != nu.n()) throw DomainError(ErrorCode::LengthMismatch, "length mismatch");
  Weight d = nu - mu;
  Scalar partial;
  bool nonneg = true, nonpos = true, all_zero = true;
  for (int i = 1; i < d.n(); ++i) {
    partial += d[i];
    if (!partial.is_integer()) return Order::Incomparable;
    const Rational& p = partial.rational();
    if (p < 0) nonneg = false;
    if (p > 0) nonpos = false;
    if (p != 0) all_zero = false;
  }
  partial += d[d.n()];
  if (!partial.is_zero()) return Order::Incomparable;
  if (all_zero) return Order::Equal;
  if (nonneg) return Order::Less;
  if (nonpos) return Order::Greater;
  return Order::Incomparable;
}

bool leq(const Weight& mu, const Weight& nu) {
  Order o = compare(mu, nu);
  return o == Order::Less || o == Order::Equal;
}

Order star_relation_by_coords(const Weight& l, SimpleIndex i) {
  check_index(i, l.n());
  const Scalar& a = l[i];
  const Scalar& b = l[i + 1];
  static const Scalar half = Scalar(Rational(1, 2));
  bool special = a == -half && b == half;
  if (succ(a, b)) return Order::Greater;
  if ((a == b && !a.is_zero()) || special) return Order::Equal;
  auto d = diff_in_Z(b, a);
  if (d && *d > 0) return Order::Less;
  return Order::Incomparable;
}

Weight iota(const Weight& l) {
  int n = l.n();
  std::vector<Scalar> c(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) c[static_cast<size_t>(i - 1)] = -l[n + 1 - i];
  return Weight(std::move(c));
}

bool is_integral(const Weight& l) {
  for (int i = 1; i < l.n(); ++i)
    if (!diff_in_Z(l[i], l[i + 1])) return false;
  return true;
}

MaximalInfo maximal_info(const Weight& l) {
  MaximalInfo info;
  info.is_maximal = true;
  for (int i = 1; i < l.n(); ++i) {
    Order o = compare(l, star(i, l));
    if (o != star_relation_by_coords(l, i))
      throw std::logic_error("star order disagrees with coordinate criterion at " + l.str());
    if (o == Order::Less) info.is_maximal = false;
    if (o == Order::Equal) info.stabilizer.insert(i);
  }
  return info;
}

ZF z_f(const Weight& l) {
  ZF r;
  int first = 0;
  for (int i = 1; i <= l.n(); ++i) {
    if (l[i].is_zero()) {
      ++r.z;
      if (!first) first = i;
    }
  }
  r.f = r.z <= 1 ? l.n() : first;
  return r;
}

bool is_finite_dimensional(const Weight& l) {
  for (int i = 1; i < l.n(); ++i)
    if (!succ(l[i], l[i + 1])) return false;
  return true;
}

Weight parse_weight(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw DomainError(ErrorCode::ParseError,
                      "weight literal must look like (a1,...,an): " + std::string(text));
  s = s.substr(1, s.size() - 2);
  std::vector<Scalar> coords;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      coords.push_back(parse_scalar(s.substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  if (coords.size() < 2)
    throw DomainError(ErrorCode::ParseError, "weight needs at least two coordinates");
  return Weight(std::move(coords));
}

Word parse_word(std::string_view text) {
  Word w;
  size_t i = 0;
  auto bad = [&] {
    throw DomainError(ErrorCode::ParseError, "bad word literal: " + std::string(text));
  };
  std::string_view t = text;
  auto trimmed = [&] {
    size_t a = 0, b = t.size();
    while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
    return t.substr(a, b - a);
  }();
  if (trimmed.empty() || trimmed == "e" || trimmed == "1") return w;
  while (i < t.size()) {
    char c = t[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c != 's') bad();
    ++i;
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == start) bad();
    w.push_back(std::stoi(std::string(t.substr(start, i - start))));
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "s" + std::to_string(w[i]);
  }
  return out;
}

}  // namespace starq
