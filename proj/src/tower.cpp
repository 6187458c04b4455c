#include "ecid/tower.hpp"

#include <algorithm>

namespace ecid {

XRat::XRat(BPoly num, BPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(num_.field() == den_.field(), Errc::field_mismatch, "tower ctor");
  require(!den_.is_zero(), Errc::division_by_zero, "zero denominator");
  reduce_full();
}

XRat::XRat(BPoly num, BPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {
  normalize_unit();
}

XRat XRat::of(BPoly p) {
  BinaryField f = p.field();
  return XRat(std::move(p), BPoly::constant(f, 1), true);
}

XRat XRat::from_rat(const Rat& r) {
  return XRat(BPoly::of(r.num()), BPoly::of(r.den()), true);
}

void XRat::reduce_full() {
  if (num_.is_zero()) {
    den_ = BPoly::constant(field(), 1);
    return;
  }
  BPoly g = BPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = BPoly::div_exact(num_, g);
    den_ = BPoly::div_exact(den_, g);
  }
  normalize_unit();
}

void XRat::normalize_unit() {
  if (num_.is_zero()) {
    den_ = BPoly::constant(field(), 1);
    return;
  }
  const uint16_t u = den_.lc().lc();
  if (u != 1) {
    const uint16_t s = field().inv(u);
    num_ = num_.scaled_unit(s);
    den_ = den_.scaled_unit(s);
  }
}

XRat operator+(const XRat& a, const XRat& b) {
  require(a.field() == b.field(), Errc::field_mismatch, "tower add");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // denominators are reduced against their own numerators, so the only
  // common factor of the sum's numerator and b1*d can divide g
  BPoly g = BPoly::gcd(a.den_, b.den_);
  if (g.is_one())
    return XRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
  BPoly b1 = BPoly::div_exact(a.den_, g);
  BPoly d1 = BPoly::div_exact(b.den_, g);
  BPoly num = a.num_ * d1 + b.num_ * b1;
  BPoly g2 = BPoly::gcd(num, g);
  if (g2.is_one()) return XRat(std::move(num), b1 * b.den_, true);
  num = BPoly::div_exact(num, g2);
  return XRat(std::move(num), b1 * BPoly::div_exact(b.den_, g2), true);
}

XRat operator*(const XRat& a, const XRat& b) {
  require(a.field() == b.field(), Errc::field_mismatch, "tower mul");
  if (a.is_zero() || b.is_zero()) return XRat(a.field());
  BPoly g1 = BPoly::gcd(a.num_, b.den_);
  BPoly g2 = BPoly::gcd(b.num_, a.den_);
  BPoly n1 = g1.is_one() ? a.num_ : BPoly::div_exact(a.num_, g1);
  BPoly d2 = g1.is_one() ? b.den_ : BPoly::div_exact(b.den_, g1);
  BPoly n2 = g2.is_one() ? b.num_ : BPoly::div_exact(b.num_, g2);
  BPoly d1 = g2.is_one() ? a.den_ : BPoly::div_exact(a.den_, g2);
  return XRat(n1 * n2, d1 * d2, true);
}

XRat operator/(const XRat& a, const XRat& b) { return a * b.inv(); }

XRat XRat::inv() const {
  require(!is_zero(), Errc::division_by_zero, "inverse of zero");
  return XRat(den_, num_, true);
}

XRat XRat::sqr() const {
  return XRat(num_.sqr(), den_.sqr(), true);
}

XRat XRat::times_x(size_t k) const {
  if (is_zero() || k == 0) return *this;
  const int v = den_.x_valuation();
  const size_t cancel = std::min(k, static_cast<size_t>(std::max(v, 0)));
  if (cancel == 0) return XRat(num_.times_x(k), den_, true);
  return XRat(num_.times_x(k - cancel), den_.shift_down_x(cancel), true);
}

bool XRat::in_x_square_subfield() const {
  auto [p0, p1] = num_.split_even_odd_x();
  auto [q0, q1] = den_.split_even_odd_x();
  return p1 * q0 == p0 * q1;
}

XRat XRat::descend_x_square() const {
  auto [p0, p1] = num_.split_even_odd_x();
  auto [q0, q1] = den_.split_even_odd_x();
  require(p1 * q0 == p0 * q1, Errc::not_in_subfield, "not a function of x^2");
  BPoly y = BPoly::monomial_x(field(), 1);
  return XRat(p0 * q0 + y * (p1 * q1), q0.sqr() + y * q1.sqr());
}

XRat XRat::compose_square_x() const {
  return XRat(num_.compose_square_x(), den_.compose_square_x(), true);
}

Rat XRat::to_rat() const {
  require(is_t_only(), Errc::not_in_subfield, "not in C(t)");
  if (is_zero()) return Rat(field());
  return Rat(num_.coeff(0), den_.coeff(0));
}

size_t XRat::max_tdeg() const { return std::max(num_.max_tdeg(), den_.max_tdeg()); }

size_t XRat::max_xdeg() const {
  return static_cast<size_t>(std::max({num_.xdeg(), den_.xdeg(), 0}));
}

XRat::TowerForm XRat::tower_form() const {
  TowerForm tf;
  const FpPoly& l = den_.lc();
  for (int i = 0; i <= num_.xdeg(); ++i) tf.num_c.emplace_back(num_.coeff(static_cast<size_t>(i)), l);
  for (int i = 0; i <= den_.xdeg(); ++i) tf.den_c.emplace_back(den_.coeff(static_cast<size_t>(i)), l);
  if (is_zero()) tf.num_c.assign(1, Rat(field()));
  return tf;
}

}  // namespace ecid
