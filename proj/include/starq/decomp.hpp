#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "starq/weights.hpp"

namespace starq {

struct JHEntry {
  Weight weight;
  int multiplicity = 2;
};

struct JHSet {
  std::vector<JHEntry> entries;

  bool same_multiset(const JHSet& o) const;
  bool distinct() const;
};

// Weyl dimension of the gl_{n-1} x gl_1 module with highest weight mu.
mpz_class levi_dim(const Weight& mu);

// Degree of a gl-bounded weight of type n-1. For regular integral
// mu = s_{n-1}...s_k . eta the alternating sum runs over i = k+1..n:
//   sum (-1)^{i-k-1} levi_dim(s_{n-1}...s_i . eta)
// where the i = n term is levi_dim(eta).
mpz_class degree_type_n1(const Weight& mu);

extern const char* const kDegreeConvention;

enum class CKind { Positive, Negative, Zero, Nonintegral };
CKind c_kind(const Scalar& c);

// The q(n) weight indexed by k in the c*eps_1 family: k = 0 is the anchor
// (c*eps_1, or c*eps_n when c < 0); k >= 1 is s_k...s_1*(c eps_1) for
// c > 0 and nonintegral c, s_k...s_{n-1}*(c eps_n) for c < 0, s_k*0 for c = 0.
Weight c_family_weight(int n, const Scalar& c, int k);

// Lower sets are obtained from the closed top (or bottom, for c < 0) set by
// dashed-arrow propagation.
JHSet jh_c_eps1(int n, const Scalar& c, int k);

// Independent path: the closed formulas where they exist, and the
// set-builder description (search of the dot orbit) elsewhere.
JHSet jh_c_eps1_direct(int n, const Scalar& c, int k);

enum class Direction { Forward, Reverse };

// Forward: image under gl_arrow(., i). Reverse: the preimage under the
// i-arrow, found through the reversal rule and checked.
JHSet propagate_jh(const JHSet& s, SimpleIndex i, Direction dir = Direction::Forward);

std::string jh_table_text(int n, const Scalar& c, const std::vector<int>& ks);

}  // namespace starq
