#pragma once

#include <string>
#include <vector>

#include "ecid/ec_group.hpp"
#include "ecid/verifier.hpp"

namespace ecid {

// The 9 GF(4)-rational points of the curve form the full 3-torsion of the
// translated group; translation by any of them extends to a field
// automorphism of L with constants enlarged to GF(4), and those
// automorphisms commute with every theta^(i) when the table passes the
// rho-commutation check. theta acts trivially on the new constants.

using TorsionPoint = ProjPoint<GfElem>;

std::string point_str(const ProjPoint<GfElem>& p);

// all projective points of z^2 + z = x^3 over GF(2^m): affine scan plus the
// point at infinity of the standard model
std::vector<ProjPoint<GfElem>> curve_points(BinaryField f);

// the 9 GF(4) points, each verified to be 3-torsion under the translated law
std::vector<TorsionPoint> enumerate_3_torsion();

// images of the generators under translation by tau: coordinates of
// eta (+)' tau as elements of L with GF(4) constants
struct GeneratorImages {
  FieldElem x, z;
};
GeneratorImages translate_generators(const TorsionPoint& tau);

// u(t, sx, sz): plain generator substitution, t untouched
FieldElem substitute_xz(const FieldElem& u, const FieldElem& sx, const FieldElem& sz);
FieldElem apply_translation(const FieldElem& u, const GeneratorImages& gi);

// reinterpret a table over a larger constant field (coefficientwise; the
// derivation fixes the new constants)
HigherDerivation lift_constants(const HigherDerivation& hd, BinaryField target);

// sigma_tau(theta^(i)(u)) = theta^(i)(sigma_tau(u)) for u in {x, z} and
// i <= order; hd over F2 is lifted to GF(4) internally
VerificationReport check_id_automorphism(const HigherDerivation& hd, const TorsionPoint& tau,
                                         int order = -1);

// exhaustive: [2]P = neutral only for P = neutral over GF(2^k), k <= k_max
VerificationReport no_rational_2_torsion(int k_max);

// point census, group closure, the 81-pair composition law of the
// translation action, a small 2-torsion scan, and the id-automorphism
// commutation for all 9 points at min(order, order_cap)
VerificationReport torsion_suite(const HigherDerivation& hd, int order_cap = 8);

}  // namespace ecid
