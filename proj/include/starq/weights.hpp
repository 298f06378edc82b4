#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "starq/scalar.hpp"

namespace starq {

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Scalar> coords);

  int n() const { return static_cast<int>(c_.size()); }
  // 1-based access, matching lambda = (a_1, ..., a_n).
  const Scalar& operator[](int i) const { return c_[static_cast<size_t>(i - 1)]; }
  Scalar& operator[](int i) { return c_[static_cast<size_t>(i - 1)]; }
  const std::vector<Scalar>& coords() const { return c_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& q, Weight a);
  friend Weight operator*(const Scalar& s, Weight a);

  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

using SimpleIndex = int;

// Letters are written left to right and act right to left:
// {3,2,1} is s3 s2 s1, so s1 is applied first.
using Word = std::vector<SimpleIndex>;

void check_index(SimpleIndex i, int n);

Weight zero_weight(int n);
Weight epsilon(int n, int i);
Weight simple_root(int n, int i);

Weight reflect(SimpleIndex i, const Weight& l);
Weight dot(SimpleIndex i, const Weight& l);
Weight star(SimpleIndex i, const Weight& l);
Weight reflect(const Word& w, const Weight& l);
Weight dot(const Word& w, const Weight& l);
Weight star(const Word& w, const Weight& l);

enum class Order { Less, Equal, Greater, Incomparable };

const char* order_name(Order o);
Order flip(Order o);

// Relation of mu to nu in the order mu <= nu iff nu - mu lies in Q+.
Order compare(const Weight& mu, const Weight& nu);
bool leq(const Weight& mu, const Weight& nu);

// Relation of l to s_i*l read off the coordinates (a_i, a_{i+1}) alone.
Order star_relation_by_coords(const Weight& l, SimpleIndex i);

Weight iota(const Weight& l);
bool is_integral(const Weight& l);

struct MaximalInfo {
  bool is_maximal = false;
  std::set<SimpleIndex> stabilizer;
};
MaximalInfo maximal_info(const Weight& l);

struct ZF {
  int z = 0;
  int f = 0;
};
ZF z_f(const Weight& l);

bool is_finite_dimensional(const Weight& l);

Weight parse_weight(std::string_view text);
// Accepts "s3 s2 s1", "s3s2s1", "s3*s2*s1" and "e"/"1"/"" for the identity.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace starq
