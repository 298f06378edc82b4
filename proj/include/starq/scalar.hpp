#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace starq {

using Rational = mpq_class;

// rational + sum of q_p * p over formal parameters p. Parameters are
// algebraically independent transcendentals, so a Scalar is an integer only
// when it has no formal part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational r) : rat_(std::move(r)) { rat_.canonicalize(); }

  static Scalar param(const std::string& name, const Rational& coef = 1);

  const Rational& rational() const { return rat_; }
  const std::map<std::string, Rational>& formal() const { return formal_; }

  bool is_zero() const { return formal_.empty() && rat_ == 0; }
  bool is_rational() const { return formal_.empty(); }
  bool is_integer() const;
  std::optional<long> as_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Rational& q);
  Scalar& operator/=(const Rational& q);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }
  friend Scalar operator/(Scalar a, const Rational& q) { return a /= q; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.formal_ == b.formal_;
  }
  // Total order used only for deterministic output, not a numeric order.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  Rational rat_{0};
  std::map<std::string, Rational> formal_;
};

// a - b is a positive integer, or a = b = 0.
bool succ(const Scalar& a, const Scalar& b);

std::optional<long> diff_in_Z(const Scalar& a, const Scalar& b);

// Grammar: sums/differences of terms; a term is a product or quotient of
// integers, p/q rationals, identifiers and parenthesized sums, as long as the
// result stays affine in the parameters. Throws ParseError.
Scalar parse_scalar(std::string_view text);

std::string format_rational(const Rational& q);

}  // namespace starq
