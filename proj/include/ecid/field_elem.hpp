#pragma once

#include "ecid/tower.hpp"

namespace ecid {

// Element a + b*z of the function field L = C(t)(x)[z]/(z^2 + z + x^3),
// char 2. Multiplication rewrites z^2 -> z + x^3; inversion goes through the
// norm a(a+b) + b^2 x^3, which vanishes only at zero since z^2+z+x^3 is
// irreducible over C(t)(x).
class FieldElem {
 public:
  explicit FieldElem(BinaryField f) : a_(f), b_(f) {}
  FieldElem(XRat a, XRat b);

  static FieldElem t(BinaryField f) { return FieldElem(XRat::var_t(f), XRat(f)); }
  static FieldElem x(BinaryField f) { return FieldElem(XRat::var_x(f), XRat(f)); }
  static FieldElem z(BinaryField f) { return FieldElem(XRat(f), XRat::constant(f, 1)); }
  static FieldElem one_of(BinaryField f) { return FieldElem(XRat::constant(f, 1), XRat(f)); }
  static FieldElem zero_of(BinaryField f) { return FieldElem(f); }
  static FieldElem from_scalar(const GfElem& c) {
    return FieldElem(XRat::of(BPoly::constant(c.fld, c.code)), XRat(c.fld));
  }
  static FieldElem from_rat(const Rat& r) { return FieldElem(XRat::from_rat(r), XRat(r.field())); }
  static FieldElem from_xrat(const XRat& a) { return FieldElem(a, XRat(a.field())); }

  const XRat& a() const { return a_; }
  const XRat& b() const { return b_; }
  const BinaryField& field() const { return a_.field(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  FieldElem zero() const { return FieldElem(field()); }
  FieldElem one() const { return one_of(field()); }

  friend FieldElem operator+(const FieldElem& u, const FieldElem& v) {
    return FieldElem(u.a_ + v.a_, u.b_ + v.b_);
  }
  friend FieldElem operator-(const FieldElem& u, const FieldElem& v) { return u + v; }
  friend FieldElem operator*(const FieldElem& u, const FieldElem& v);
  friend FieldElem operator/(const FieldElem& u, const FieldElem& v) { return u * v.inv(); }
  FieldElem inv() const;
  FieldElem sqr() const;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  bool in_base_rat() const { return b_.is_zero() && a_.is_t_only(); }
  Rat to_base_rat() const;

  // membership in L^2 * C(t) = C(t)(x^2) + C(t)(x^2) z^2
  bool in_square_subring() const;
  // u = alpha(t, x^2) + beta(t, x^2) z^2; components expressed in y = x^2
  struct SquareDecomp {
    XRat alpha, beta;
  };
  SquareDecomp square_decompose() const;
  static FieldElem square_recompose(const SquareDecomp& d);

  size_t max_tdeg() const { return std::max(a_.max_tdeg(), b_.max_tdeg()); }
  size_t max_xdeg() const { return std::max(a_.max_xdeg(), b_.max_xdeg()); }
  size_t coeff_count() const { return a_.coeff_count() + b_.coeff_count(); }

 private:
  XRat a_, b_;
};

}  // namespace ecid
