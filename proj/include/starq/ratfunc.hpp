#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starq/scalar.hpp"

namespace starq {

// Monomial in the parameters: sorted (name, exponent > 0) pairs.
using PMono = std::vector<std::pair<std::string, int>>;

// Lex order with variables prioritised by name; a monomial order.
struct PMonoLess {
  bool operator()(const PMono& a, const PMono& b) const;
};

class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Rational& c);
  explicit Poly(const Scalar& s);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant() const;  // requires is_constant()
  const std::map<PMono, Rational, PMonoLess>& terms() const { return t_; }
  std::pair<PMono, Rational> leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& q);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  // Exact quotient a / b, or nothing when b does not divide a.
  static std::optional<Poly> divide(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  void add_term(const PMono& m, const Rational& c);
  std::map<PMono, Rational, PMonoLess> t_;
};

// Element of Q(parameters) as num/den with den monic in the lex order. No
// gcd is computed; exact divisions are cancelled when they exist.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly p) : num_(std::move(p)) {}
  RatFunc(Poly num, Poly den);

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_{1};
};

}  // namespace starq
