#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starq/weights.hpp"

namespace starq {

// Int(k): injective along -alpha_k only. The nonintegral kinds name the
// position in a nonintegral family; NonintPair stores the smaller index k of
// the injective pair {k, k+1}.
struct TypeTag {
  enum class Kind { Int, Nonint1, NonintPair, NonintN1 };
  Kind kind = Kind::Int;
  int k = 0;

  static TypeTag integral(int k) { return {Kind::Int, k}; }
  static TypeTag nonint_at(int position, int n);

  // Simple directions in which the lowering operators act injectively.
  std::set<int> injective_set(int n) const;
  std::string str() const;     // q(n) naming: NonintPair(k,k+1)
  std::string gl_str() const;  // gl_n naming: NonintPair(k+1,k)

  friend bool operator==(const TypeTag& a, const TypeTag& b) {
    return a.kind == b.kind && a.k == b.k;
  }
};

enum class WeightClass { Regular, Singular, Nonintegral };
const char* class_name(WeightClass c);

enum class UnboundedReason {
  None,
  MultipleStrings,
  StabilizedBelowTop,
  StabilizerTooLarge,
  NonintegralShape,
  InjectiveSetMismatch,
  AnchorNotMaximal,
};
const char* reason_name(UnboundedReason r);

struct Verdict {
  enum class Kind { FiniteDimensional, BoundedInfinite, Unbounded };
  Kind kind = Kind::Unbounded;
  WeightClass cls = WeightClass::Regular;
  std::optional<TypeTag> type;
  Weight maximal;   // the string top, or the type-1 anchor when nonintegral
  Word word;        // star(word, maximal) == queried weight
  UnboundedReason reason = UnboundedReason::None;
  std::string family_id;

  bool bounded() const { return kind != Kind::Unbounded; }
};

Verdict classify(const Weight& mu);

struct BoundedEntry {
  Weight weight;
  std::optional<TypeTag> type;  // empty for the finite-dimensional anchor
  Word word;
};

// Word for the product of s_j*, j from i to k, read left to right:
// s_i s_{i+1} ... s_k when i <= k and s_i s_{i-1} ... s_k when i > k.
Word product_word(int i, int k);

std::vector<BoundedEntry> enumerate_bounded(const Weight& l);

struct Arrow {
  Weight from;
  SimpleIndex label = 0;
  Weight to;
  bool bidirectional = false;
  bool entry = false;  // starts outside the family (the maximal weight)
};

struct Family {
  enum class Kind { RegularIntegral, Singular, Nonintegral };
  Kind kind = Kind::RegularIntegral;
  std::vector<int> regularities;  // RegularIntegral
  int singularity = 0;            // Singular
  Weight anchor;
  std::vector<BoundedEntry> members;  // ordered by type
  std::vector<Arrow> arrows;
  bool dashed = false;  // gl_n family

  std::string id() const;
};

std::vector<Family> families(const Weight& l);

struct CuspidalParams {
  Weight lambda;
  std::vector<Scalar> x;
};

struct CuspidalAnchor {
  Weight anchor;
};

CuspidalAnchor validate_cuspidal(const CuspidalParams& p);

}  // namespace starq
