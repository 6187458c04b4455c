#pragma once

#include <bit>
#include <cstdint>

#include "ecid/errors.hpp"

namespace ecid {

// Group laws on the curve z^2 + z = x^3 over any char-2 coefficient ring K
// that supplies zero(), one(), is_zero(), inv(), +, *, ==. Two views of the
// same curve are used: the standard one with neutral element at infinity,
// and the translated one with neutral element N = (0,0), related by
// P (+)' Q = P + Q - N. The affine chord formulas below throw
// non_invertible_denominator when an intermediate divisor is not a unit.

template <class K>
K k_sqr(const K& v) {
  if constexpr (requires { v.sqr(); })
    return v.sqr();
  else
    return v * v;
}

template <class K>
K k_inv(const K& v, const char* what) {
  try {
    return v.inv();
  } catch (const Error&) {
    fail(Errc::non_invertible_denominator, what);
  }
}

template <class K>
bool on_curve(const K& x, const K& z) {
  return k_sqr(x) * x == k_sqr(z) + z;
}

template <class K>
struct AffinePoint {
  K x, z;

  static AffinePoint checked(K x, K z) {
    require(on_curve(x, z), Errc::off_curve, "point not on z^2+z = x^3");
    return {std::move(x), std::move(z)};
  }
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// Point of the standard-model group; carries a coefficient-ring sample so
// the point at infinity can still mint constants.
template <class K>
class ProjPoint {
 public:
  static ProjPoint infinity(const K& proto) {
    return ProjPoint(AffinePoint<K>{proto.zero(), proto.zero()}, true);
  }
  static ProjPoint at(AffinePoint<K> p) { return ProjPoint(std::move(p), false); }

  bool is_infinity() const { return inf_; }
  const AffinePoint<K>& affine() const {
    require(!inf_, Errc::internal_error, "affine part of the point at infinity");
    return pt_;
  }
  const K& sample() const { return pt_.x; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.pt_ == b.pt_;
  }

 private:
  ProjPoint(AffinePoint<K> p, bool inf) : pt_(std::move(p)), inf_(inf) {}
  AffinePoint<K> pt_;
  bool inf_;
};

// complete addition for the standard law (neutral at infinity)
template <class K>
ProjPoint<K> std_add(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const K& x1 = p.affine().x;
  const K& z1 = p.affine().z;
  const K& x2 = q.affine().x;
  const K& z2 = q.affine().z;
  const K dx = x1 + x2;
  K lam = x1.zero();
  if (dx.is_zero()) {
    // same x: either conjugate points (sum is infinity) or a doubling,
    // where implicit differentiation of z^2+z = x^3 gives slope x^2
    if (!(z1 + z2).is_zero()) return ProjPoint<K>::infinity(x1);
    lam = k_sqr(x1);
  } else {
    lam = (z1 + z2) * k_inv(dx, "chord with equal x coordinates");
  }
  K x3 = k_sqr(lam) + x1 + x2;
  K z3 = lam * (x3 + x1) + z1;  // third intersection of the line
  return ProjPoint<K>::at({std::move(x3), z3 + x1.one()});
}

template <class K>
ProjPoint<K> std_neg(const ProjPoint<K>& p) {
  if (p.is_infinity()) return p;
  return ProjPoint<K>::at({p.affine().x, p.affine().z + p.sample().one()});
}

template <class K>
ProjPoint<K> translated_neutral(const K& proto) {
  return ProjPoint<K>::at({proto.zero(), proto.zero()});
}

// -N = (0,1) = 2N; used to fold the standard law into the translated one
template <class K>
ProjPoint<K> minus_neutral(const K& proto) {
  return ProjPoint<K>::at({proto.zero(), proto.one()});
}

template <class K>
ProjPoint<K> translated_add(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  return std_add(std_add(p, q), minus_neutral(p.sample()));
}

template <class K>
ProjPoint<K> translated_sub(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  return std_add(std_add(p, std_neg(q)), translated_neutral(p.sample()));
}

template <class K>
ProjPoint<K> translated_neg(const ProjPoint<K>& p) {
  return std_add(std_neg(p), minus_neutral(p.sample()));
}

// direct formula for the additive inverse in the translated group
template <class K>
AffinePoint<K> neg_translated_affine(const AffinePoint<K>& p) {
  K w = k_inv(p.x.one() + p.z, "inverse point needs 1+z invertible");
  return AffinePoint<K>::checked(p.x * w, p.z * w);
}

// p1 (-)' p2 via the chord through p2 and the inverse of p1: the third
// intersection of that line with the curve
template <class K>
AffinePoint<K> affine_sub(const AffinePoint<K>& p1, const AffinePoint<K>& p2) {
  AffinePoint<K> q = neg_translated_affine(p1);
  K dx = q.x + p2.x;
  K lam = (q.z + p2.z) * k_inv(dx, "chord through equal x coordinates");
  K x4 = k_sqr(lam) + q.x + p2.x;
  K z4 = lam * (x4 + p2.x) + p2.z;
  return AffinePoint<K>::checked(std::move(x4), std::move(z4));
}

// n-fold sum in the translated group via double-and-add; n = 0 gives the
// neutral element (0,0)
template <class K>
ProjPoint<K> mul_n(const ProjPoint<K>& p, uint64_t n) {
  ProjPoint<K> acc = translated_neutral(p.sample());
  if (n == 0) return acc;
  for (int b = 63 - std::countl_zero(n); b >= 0; --b) {
    acc = translated_add(acc, acc);
    if ((n >> b) & 1) acc = translated_add(acc, p);
  }
  return acc;
}

}  // namespace ecid
