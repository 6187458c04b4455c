#pragma once

#include <span>
#include <string>
#include <vector>

#include "ecid/hd.hpp"
#include "ecid/ratfunc.hpp"

namespace ecid {

// Coordinates of eta (-)' theta*(eta) as series in T, where eta = (x, z) is
// the generic point and theta*(eta) = (theta(x), theta(z)). Both series
// vanish at T = 0 and satisfy f^3 = g^2 + g at the truncation order.
struct DifferenceSeries {
  Tps<FieldElem> f, g;
};

DifferenceSeries compute_f_g(const ThetaContext& ctx, int order = -1);
DifferenceSeries compute_f_g(const HigherDerivation& hd, int order = -1);

// slope of the chord through the inverse point (x,z)/(1+z) and theta*(eta):
// Q(T) = (theta(z) + z/(1+z)) / (theta(x) + x/(1+z))
Tps<FieldElem> difference_slope(const ThetaContext& ctx, int order);

// square-root part of the even coefficients of f: f_{2h} = xi_{2h} + Q_h^2.
// ftilde for block l is Q at index 2^(l-1) (zero for l = 0) and needs the
// table only through 2^(l-1) entries.
FieldElem ftilde(const ThetaContext& ctx, int ell);

// Free block choices c_l, rational functions in a formal variable s that the
// recursion reads as c_l(t^(2^(l+1))). Missing entries default to zero.
struct ChoiceList {
  std::vector<Rat> entries;
  std::vector<std::string> texts;
  static ChoiceList parse(BinaryField f, std::span<const std::string> texts);
};

// Growing table during block recursion: xi_1..xi_k plus the derived
// theta(z) coefficients (zc[0] = z, size xi.size() + 1).
struct BuildState {
  BinaryField fld;
  std::vector<FieldElem> xi;
  std::vector<FieldElem> zc;

  static BuildState empty(BinaryField f);
  ThetaContext context() const;
};

FieldElem ftilde(const BuildState& st, int ell);

// One recursion block: from xi_1..xi_{2^l-1} set
//   xi_{2^l}    = sum_{m=1}^{2^l-1} theta^(2^l)(xi_m) t^m + W^2 + c_sub,
//   W           = sum_{m=0}^{2^l-1} theta^(m)(ftilde_l) t^m,
//   xi_{2^l+m}  = theta^(2^l)(xi_m)   while 2^l + m <= cap,
// where theta^(2^l) is the protected evaluation (well defined before
// xi_{2^l} exists) and c_sub must already lie in C(t^(2^(l+1))).
void extend_block(BuildState& st, int ell, const Rat& c_sub, int cap);

// Membership test for a candidate xi_{2^l}: with S the protected block sum,
// candidate + S must lie in L^2*C(t), in Ker(theta^(2^j)) for all j < l and
// in Ker(theta^(2^l)). The block values produced by extend_block satisfy
// this for every admissible choice.
bool check_choice_coset(const BuildState& st, int ell, const FieldElem& candidate);

// Runs the block recursion until the table covers `order` and packages the
// result with derived z-coefficients and the normalized choice log.
HigherDerivation construct(BinaryField f, int order, const ChoiceList& choices);

}  // namespace ecid
