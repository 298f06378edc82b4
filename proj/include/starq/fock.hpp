#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "starq/ratfunc.hpp"
#include "starq/weights.hpp"

namespace starq {

// x^e * xi_{i1} ... xi_{ik} with i1 < ... < ik; bit i-1 of mask is xi_i.
struct Monomial {
  std::vector<Scalar> x;
  std::uint32_t mask = 0;

  int n() const { return static_cast<int>(x.size()); }
  int parity() const;
  Weight weight() const;  // nu_i = e_i + [xi_i present]
  Scalar degree() const;
  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mask == b.mask && a.x == b.x;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.mask != b.mask) return a.mask < b.mask;
    return a.x < b.x;
  }
};

// "x1^(c-1) x2 xi1 xi3"; xi indices must be strictly ascending. "1" is the
// empty monomial.
Monomial parse_monomial(std::string_view text, int n);

class FockElement {
 public:
  FockElement() = default;
  FockElement(const Monomial& m, RatFunc c = RatFunc(1));

  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, RatFunc>& terms() const { return t_; }
  int parity() const;  // throws if mixed; 0 for the zero element

  void add(const Monomial& m, const RatFunc& c);
  FockElement operator-() const;
  FockElement& operator+=(const FockElement& o);
  FockElement& operator-=(const FockElement& o);
  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
  friend FockElement operator*(const RatFunc& c, const FockElement& v);
  friend bool operator==(const FockElement& a, const FockElement& b);

  std::map<Weight, FockElement> weight_components() const;
  std::string str() const;

 private:
  std::map<Monomial, RatFunc> t_;
};

// Sum of elementary differential operators
//   kind XX: x_i d/dx_j,  kind QQ: xi_i d/dxi_j,
//   kind XQ: x_i d/dxi_j, kind QX: xi_i d/dx_j.
struct DiffOp {
  enum class Kind { XX, QQ, XQ, QX };
  struct Term {
    Kind kind;
    int i, j;  // 1-based
    Rational coef;
  };
  std::vector<Term> terms;
};

FockElement apply(const DiffOp& op, const FockElement& v);

using Matrix = std::vector<std::vector<Rational>>;

// X_{A,B} in q(n): the block matrix [[A, B], [B, A]].
struct Generator {
  int n = 0;
  Matrix A, B;

  static Generator zero(int n);
  static Generator even_unit(int n, int i, int j);  // X_{E_ij, 0}
  static Generator odd_unit(int n, int i, int j);   // X_{0, E_ij}
  static Generator e(int n, int i) { return even_unit(n, i, i + 1); }
  static Generator f(int n, int i) { return even_unit(n, i + 1, i); }
  static Generator E(int n, int i) { return odd_unit(n, i, i + 1); }
  static Generator F(int n, int i) { return odd_unit(n, i + 1, i); }
  static Generator h(int n, int j) { return even_unit(n, j, j); }
  static Generator H(int n, int j) { return odd_unit(n, j, j); }

  bool is_even() const;
  bool is_odd() const;
  int parity() const;  // throws when not homogeneous
  DiffOp op() const;
  std::string str() const;
};

// Super bracket of homogeneous generators.
Generator bracket(const Generator& x, const Generator& y);

FockElement apply(const Generator& g, const FockElement& v);

// J = sum_i (x_i d/dxi_i - xi_i d/dx_i).
DiffOp fock_J(int n);

// The module F_mu: exponents congruent to mu mod Z and total degree sum(mu).
class FockModule {
 public:
  explicit FockModule(Weight mu) : mu_(std::move(mu)) {}
  const Weight& mu() const { return mu_; }
  int n() const { return mu_.n(); }
  bool contains(const Monomial& m) const;
  bool contains(const FockElement& v) const;
  bool supports(const Weight& nu) const;
  // Basis of the nu-weight space: the monomial with mask m is x^{nu - m} xi^m.
  std::vector<Monomial> weight_basis(const Weight& nu) const;

 private:
  Weight mu_;
};

int weight_space_dim(const Weight& mu, const Weight& nu);

// Row-reduced spanning set of a subspace of K^d, K the parameter field.
class Rref {
 public:
  explicit Rref(size_t dim = 0) : dim_(dim) {}
  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<RatFunc>>& rows() const { return rows_; }
  std::vector<RatFunc> reduce(std::vector<RatFunc> v) const;
  bool add(std::vector<RatFunc> v);  // true when v was independent

 private:
  size_t dim_;
  std::vector<std::vector<RatFunc>> rows_;
  std::vector<size_t> pivots_;
};

// Basis of {x : M x = 0} for a rows x cols matrix.
std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> m, size_t cols);

// Span of the submodule generated by a set of vectors, on the weight spaces
// needed to test vectors of the given target weights. Computed as U(n-)
// applied to the U(b)-closure of the generators; the U(b)-closure must stay
// within `window` (sup-norm) of some target.
class SubmoduleSpan {
 public:
  SubmoduleSpan(const FockModule& F, const std::vector<FockElement>& generators,
                const std::vector<Weight>& targets, int window);

  // v must be supported on target weights.
  bool contains(const FockElement& v) const;
  FockElement reduce(const FockElement& v) const;
  std::vector<FockElement> basis(const Weight& nu) const;

 private:
  const Rref& space(const Weight& nu) const;
  FockModule F_;
  std::vector<Weight> targets_;
  std::map<Weight, Rref> spaces_;
};

// Coordinates of a vector supported on the nu-weight space, indexed by mask.
std::vector<RatFunc> coords(const FockElement& v, const Weight& nu);
FockElement from_coords(const std::vector<RatFunc>& c, const Weight& nu);

// The polynomial monomials of total degree d (a spanning set of the
// polynomial part of F_mu when sum(mu) = d).
std::vector<FockElement> polynomial_part(int n, int d);

// n+-primitive vectors of weight nu in F / U(quotient_generators), as
// representatives reduced modulo the submodule; a basis of the quotient space.
std::vector<FockElement> find_primitive(const FockModule& F,
                                        const std::vector<FockElement>& quotient_generators,
                                        const Weight& nu, int window);

// Whether target lies in the span of vs, all supported on the nu-weight space.
bool in_span(const std::vector<FockElement>& vs, const FockElement& target, const Weight& nu);

struct CheckReport {
  std::string check;
  bool passed = true;
  int cases = 0;
  std::vector<std::string> witnesses;  // failures, or a few sample cases

  void expect(bool ok, const std::string& what);
};

CheckReport check_J(int n, int samples, unsigned seed = 1);
CheckReport check_homomorphism(int n, int samples, unsigned seed = 1);
CheckReport check_u_relations();  // the q(3) relations for u inside F_0 / C
CheckReport check_primitives();
CheckReport check_weight_spaces(int samples, unsigned seed = 1);

}  // namespace starq
