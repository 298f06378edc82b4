#include "starq/ratfunc.hpp"

#include <stdexcept>

namespace starq {

bool PMonoLess::operator()(const PMono& a, const PMono& b) const {
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) return false;  // a has an extra variable
    if (i == a.size()) return true;
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second < b[j].second;
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      return false;  // a has positive degree in a higher-priority variable
    } else {
      return true;
    }
  }
  return false;
}

namespace {

PMono mono_mul(const PMono& a, const PMono& b) {
  PMono r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

std::optional<PMono> mono_div(const PMono& a, const PMono& b) {
  PMono r;
  size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && b[j].first < a[i].first) return std::nullopt;
    if (j < b.size() && b[j].first == a[i].first) {
      int e = a[i].second - b[j].second;
      if (e < 0) return std::nullopt;
      if (e > 0) r.emplace_back(a[i].first, e);
      ++i, ++j;
    } else {
      r.push_back(a[i++]);
    }
  }
  if (j < b.size()) return std::nullopt;
  return r;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) t_[{}] = c;
}

Poly::Poly(const Rational& c) {
  if (c != 0) t_[{}] = c;
}

Poly::Poly(const Scalar& s) {
  if (s.rational() != 0) t_[{}] = s.rational();
  for (const auto& [name, q] : s.formal()) t_[{{name, 1}}] = q;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

Rational Poly::constant() const {
  if (t_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return t_.begin()->second;
}

std::pair<PMono, Rational> Poly::leading() const {
  if (t_.empty()) throw std::logic_error("leading term of zero");
  return *t_.rbegin();
}

void Poly::add_term(const PMono& m, const Rational& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& q) {
  if (q == 0) {
    t_.clear();
  } else {
    for (auto& [m, c] : t_) c *= q;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

std::optional<Poly> Poly::divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a, q;
  auto [lm, lc] = b.leading();
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading();
    auto m = mono_div(rm, lm);
    if (!m) return std::nullopt;
    Poly t;
    t.add_term(*m, rc / lc);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    std::string mono;
    for (const auto& [name, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string coef = a.get_str();
    std::string term = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
    if (c < 0) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    out += term;
  }
  return out;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = Poly::divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly(1);
      return;
    }
  }
  Rational lc = den_.leading().second;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace starq
