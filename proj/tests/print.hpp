#pragma once

#include <ostream>

#include "starq/scalar.hpp"
#include "starq/weights.hpp"

namespace starq {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const Weight& w, std::ostream* os) { *os << w.str(); }

}  // namespace starq
