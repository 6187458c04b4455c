#pragma once

#include <string>
#include <string_view>

#include "ecid/field_elem.hpp"

namespace ecid {

// Canonical text form. Terms in descending degree joined by '+', powers with
// '^', explicit '*' between coefficient and variable, fractions printed as
// (num)/(den), GF(2^m) scalars as polynomials in the generator w. Reduced
// representations only, so equal values print identically.
std::string gf_str(const GfElem& c);
std::string poly_str(const FpPoly& p, char var);
std::string rat_str(const Rat& r, char var = 't');
std::string xrat_str(const XRat& u);
std::string elem_str(const FieldElem& u);

// Expression parsing into the field tower. `vars` lists the variable letters
// the input may use; each of t, x, z keeps its meaning, s is read as the
// variable of a univariate rational function and lands on the t slot, w is
// the GF(2^m) generator. Integer literals must be 0 or 1 except in
// exponents. Throws Errc::parse_error on malformed input.
FieldElem parse_elem(std::string_view text, BinaryField f, std::string_view vars = "txz");
XRat parse_xrat(std::string_view text, BinaryField f);
Rat parse_rat(std::string_view text, BinaryField f, char var = 't');
GfElem parse_gf(std::string_view text, BinaryField f);

uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace ecid
