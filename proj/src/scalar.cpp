#include "starq/scalar.hpp"

#include <cctype>

#include "starq/error.hpp"

namespace starq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::NotMaximal: return "not_maximal";
    case ErrorCode::NotIntegral: return "not_integral";
    case ErrorCode::StabilizerTooLarge: return "stabilizer_too_large";
    case ErrorCode::NotAnchor: return "not_anchor";
    case ErrorCode::NotTypeOne: return "not_type_one";
    case ErrorCode::IntegralTwist: return "integral_twist";
    case ErrorCode::NoArrow: return "no_arrow";
    case ErrorCode::NotDominant: return "not_dominant";
    case ErrorCode::WrongType: return "wrong_type";
    case ErrorCode::BadShape: return "bad_shape";
    case ErrorCode::WindowTooSmall: return "window_too_small";
    case ErrorCode::NotInModule: return "not_in_module";
  }
  return "unknown";
}

Scalar Scalar::param(const std::string& name, const Rational& coef) {
  Scalar s;
  if (coef != 0) s.formal_[name] = coef;
  return s;
}

bool Scalar::is_integer() const {
  return formal_.empty() && rat_.get_den() == 1;
}

std::optional<long> Scalar::as_integer() const {
  if (!is_integer() || !rat_.get_num().fits_slong_p()) return std::nullopt;
  return rat_.get_num().get_si();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.rat_ = -rat_;
  for (const auto& [k, v] : formal_) r.formal_[k] = -v;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  rat_ += o.rat_;
  for (const auto& [k, v] : o.formal_) {
    auto it = formal_.find(k);
    if (it == formal_.end()) {
      formal_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) formal_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Rational& q) {
  if (q == 0) {
    rat_ = 0;
    formal_.clear();
    return *this;
  }
  rat_ *= q;
  for (auto& [k, v] : formal_) v *= q;
  return *this;
}

Scalar& Scalar::operator/=(const Rational& q) {
  if (q == 0) throw DomainError(ErrorCode::ParseError, "division by zero");
  return *this *= Rational(1) / q;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
  auto ia = a.formal_.begin();
  auto ib = b.formal_.begin();
  for (; ia != a.formal_.end() && ib != b.formal_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.formal_.end() && ib != b.formal_.end();
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

std::string Scalar::str() const {
  std::string out;
  for (const auto& [name, q] : formal_) {
    mpz_class num = q.get_num();
    const mpz_class& den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    std::string term;
    if (num == 1) {
      term = name;
    } else {
      term = num.get_str() + "*" + name;
    }
    if (den != 1) term += "/" + den.get_str();
    if (neg) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += term;
  }
  if (rat_ != 0 || out.empty()) {
    if (rat_ >= 0 && !out.empty()) out += "+";
    out += format_rational(rat_);
  }
  return out;
}

bool succ(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) return true;
  auto d = diff_in_Z(a, b);
  return d && *d > 0;
}

std::optional<long> diff_in_Z(const Scalar& a, const Scalar& b) {
  return (a - b).as_integer();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError(ErrorCode::ParseError,
                      "bad scalar '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v;
    if (eat('-')) {
      v = -term();
    } else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) {
        Scalar w = factor();
        if (v.is_rational()) {
          v = w * v.rational();
        } else if (w.is_rational()) {
          v *= w.rational();
        } else {
          fail("product of two parameters");
        }
      } else if (eat('/')) {
        Scalar w = factor();
        if (!w.is_rational()) fail("division by a parameter");
        if (w.rational() == 0) fail("division by zero");
        v /= w.rational();
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Scalar::param(std::string(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).run(); }

}  // namespace starq
