#pragma once

#include <vector>

#include "starq/classify.hpp"
#include "starq/orbits.hpp"

namespace starq {

// gl_n counterparts: everything uses the dot action in place of star.
// Verdict::type is named with TypeTag::gl_str() when printed.
using GlVerdict = Verdict;

GlVerdict gl_classify(const Weight& mu);

// Increasing strings for the dot action; same conventions as the star ones.
std::vector<IncreasingString> gl_increasing_strings(const Weight& mu, std::size_t limit = 0);

bool gl_is_dominant(const Weight& l);
MaximalInfo gl_maximal_info(const Weight& l);

// Every gl_n family of an anchor: one per regularity for a dominant regular
// weight, a single chain otherwise.
std::vector<Family> gl_families(const Weight& l);
// The family of the given regularity (dominant regular anchors) or the
// unique family (singular and nonintegral anchors; pass 0).
Family gl_family(const Weight& l, int regularity = 0);

// The unique gl-bounded eta with mu --i--> eta (dashed arrow).
Weight gl_arrow(const Weight& mu, SimpleIndex i);

// Type index of a gl-bounded weight inside its family: the Int(k) index, or
// the position m of s_m...s_1 . anchor for nonintegral weights.
int gl_position(const GlVerdict& v);

}  // namespace starq
