#pragma once

#include <cstdint>

namespace ecid {

// Parity of the binomial coefficient C(i+j, i).
// Base-2 carry criterion: C(i+j, i) is odd iff adding i and j produces no
// carries, i.e. the bit sets of i and j are disjoint.
constexpr bool binom_mod2(uint64_t i, uint64_t j) { return (i & j) == 0; }

}  // namespace ecid
