#include "ecid/ratfunc.hpp"

namespace ecid {

Rat::Rat(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(num_.field() == den_.field(), Errc::field_mismatch, "rat ctor");
  require(!den_.is_zero(), Errc::division_by_zero, "zero denominator");
  normalize();
}

Rat Rat::of(FpPoly p) {
  BinaryField f = p.field();
  return Rat(std::move(p), FpPoly::constant(f, 1));
}

void Rat::normalize() {
  if (num_.is_zero()) {
    den_ = FpPoly::constant(field(), 1);
    return;
  }
  FpPoly g = FpPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = FpPoly::div_exact(num_, g);
    den_ = FpPoly::div_exact(den_, g);
  }
  if (den_.lc() != 1) {
    const uint16_t s = field().inv(den_.lc());
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

Rat Rat::inv() const {
  require(!is_zero(), Errc::division_by_zero, "inverse of zero rational");
  return Rat(den_, num_);
}

Rat Rat::sqr() const {
  Rat r(field());
  r.num_ = num_.sqr();
  r.den_ = den_.sqr();
  // squares of a reduced pair stay coprime and the denominator stays monic
  return r;
}

bool Rat::in_square_subfield() const {
  auto [p0, p1] = num_.split_even_odd();
  auto [q0, q1] = den_.split_even_odd();
  return p1 * q0 == p0 * q1;
}

Rat Rat::descend_square() const {
  auto [p0, p1] = num_.split_even_odd();
  auto [q0, q1] = den_.split_even_odd();
  require(p1 * q0 == p0 * q1, Errc::not_in_subfield, "not a function of the squared variable");
  // multiply num and den by the denominator; the new denominator
  // q0(v)^2 + v q1(v)^2 and numerator p0 q0 + v p1 q1 live in v = t^2
  FpPoly v = FpPoly::monomial(field(), 1);
  return Rat(p0 * q0 + v * (p1 * q1), q0.sqr() + v * q1.sqr());
}

Rat Rat::compose_square() const { return compose_power2(1); }

Rat Rat::compose_power2(unsigned k) const {
  if (k == 0) return *this;
  return Rat(num_.compose_power2(k), den_.compose_power2(k));
}

GfElem Rat::eval(const GfElem& v) const {
  GfElem d = den_.eval(v);
  require(!d.is_zero(), Errc::non_invertible_denominator, "rat eval at pole");
  return num_.eval(v) / d;
}

}  // namespace ecid
