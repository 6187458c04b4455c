#include "ecid/field_elem.hpp"

namespace ecid {

FieldElem::FieldElem(XRat a, XRat b) : a_(std::move(a)), b_(std::move(b)) {
  require(a_.field() == b_.field(), Errc::field_mismatch, "field elem ctor");
}

FieldElem operator*(const FieldElem& u, const FieldElem& v) {
  require(u.field() == v.field(), Errc::field_mismatch, "field elem mul");
  // (a1+b1 z)(a2+b2 z) = (a1a2 + b1b2 x^3) + (a1b2 + a2b1 + b1b2) z
  // three products via Karatsuba: p = a1a2, q = b1b2, r = (a1+b1)(a2+b2)
  if (u.b_.is_zero() && v.b_.is_zero()) return FieldElem(u.a_ * v.a_, u.b_);
  XRat p = u.a_ * v.a_;
  XRat q = u.b_ * v.b_;
  XRat r = (u.a_ + u.b_) * (v.a_ + v.b_);
  return FieldElem(p + q.times_x(3), r + p);
}

FieldElem FieldElem::inv() const {
  require(!is_zero(), Errc::division_by_zero, "inverse of zero field element");
  if (b_.is_zero()) return FieldElem(a_.inv(), b_);
  // (a + bz)^-1 = ((a+b) + bz) / (a(a+b) + b^2 x^3)
  XRat n = a_ * (a_ + b_) + b_.sqr().times_x(3);
  require(!n.is_zero(), Errc::internal_error, "vanishing norm on nonzero element");
  XRat ninv = n.inv();
  return FieldElem((a_ + b_) * ninv, b_ * ninv);
}

FieldElem FieldElem::sqr() const {
  // (a + bz)^2 = (a^2 + b^2 x^3) + b^2 z
  XRat b2 = b_.sqr();
  return FieldElem(a_.sqr() + b2.times_x(3), b2);
}

Rat FieldElem::to_base_rat() const {
  require(in_base_rat(), Errc::not_in_subfield, "not in C(t)");
  return a_.to_rat();
}

bool FieldElem::in_square_subring() const {
  if (!b_.in_x_square_subfield()) return false;
  return (a_ + b_.times_x(3)).in_x_square_subfield();
}

FieldElem::SquareDecomp FieldElem::square_decompose() const {
  // u = a + bz with z^2 = z + x^3 gives u = alpha(x^2) + beta(x^2) z^2
  // exactly when beta(x^2) = b and alpha(x^2) = a + b x^3
  require(b_.in_x_square_subfield(), Errc::not_in_subfield, "z part not in C(t)(x^2)");
  XRat alpha_arg = a_ + b_.times_x(3);
  require(alpha_arg.in_x_square_subfield(), Errc::not_in_subfield,
          "plain part not in C(t)(x^2) after removing b x^3");
  return {alpha_arg.descend_x_square(), b_.descend_x_square()};
}

FieldElem FieldElem::square_recompose(const SquareDecomp& d) {
  XRat alpha = d.alpha.compose_square_x();
  XRat beta = d.beta.compose_square_x();
  // alpha(x^2) + beta(x^2) z^2 = (alpha(x^2) + beta(x^2) x^3) + beta(x^2) z
  return FieldElem(alpha + beta.times_x(3), beta);
}

}  // namespace ecid
