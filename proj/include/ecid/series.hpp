#pragma once

#include "ecid/field_elem.hpp"
#include "ecid/ratfunc.hpp"
#include "ecid/tps.hpp"

namespace ecid {

// p(t+T) truncated at T^order; coefficient of T^j is the j-th Hasse
// derivative of p
Tps<Rat> poly_shift(const FpPoly& p, int order);

// r(t+T) for a rational function, via shifted numerator times the inverse of
// the shifted denominator
Tps<Rat> taylor_shift(const Rat& r, int order);

// Unique series Z with Z^2 + Z = X^3 and Z(0) = z0. Requires
// z0^2 + z0 = X(0)^3. Coefficientwise in char 2: the T^m coefficient of
// Z^2 + Z is z_m + (z_{m/2}^2 for even m), so z_m is determined by the
// T^m coefficient of X^3 and earlier z's.
Tps<FieldElem> solve_artin_schreier(const Tps<FieldElem>& xs, const FieldElem& z0);

}  // namespace ecid
