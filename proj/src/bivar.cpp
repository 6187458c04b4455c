#include "ecid/bivar.hpp"

#include <algorithm>

namespace ecid {

namespace {
const FpPoly& zero_poly(const BinaryField& f) {
  static const FpPoly z1{BinaryField(1)};
  static const FpPoly z2{BinaryField(2)};
  static const FpPoly z3{BinaryField(3)};
  static const FpPoly z4{BinaryField(4)};
  static const FpPoly z5{BinaryField(5)};
  static const FpPoly z6{BinaryField(6)};
  static const FpPoly z7{BinaryField(7)};
  static const FpPoly z8{BinaryField(8)};
  static const FpPoly* const table[9] = {nullptr, &z1, &z2, &z3, &z4, &z5, &z6, &z7, &z8};
  return *table[f.degree()];
}
}  // namespace

void BPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly::BPoly(BinaryField f, std::vector<FpPoly> coeffs) : fld_(f), c_(std::move(coeffs)) {
  for (const FpPoly& p : c_)
    require(p.field() == fld_, Errc::field_mismatch, "bivariate ctor");
  trim();
}

BPoly BPoly::of(FpPoly p) {
  BinaryField f = p.field();
  return BPoly(f, std::vector<FpPoly>{std::move(p)});
}

const FpPoly& BPoly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : zero_poly(fld_);
}

const FpPoly& BPoly::lc() const {
  return c_.empty() ? zero_poly(fld_) : c_.back();
}

BPoly operator+(const BPoly& a, const BPoly& b) {
  require(a.fld_ == b.fld_, Errc::field_mismatch, "bivariate add");
  std::vector<FpPoly> c;
  c.reserve(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i)
    c.push_back(a.coeff(i) + b.coeff(i));
  return BPoly(a.fld_, std::move(c));
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  require(a.fld_ == b.fld_, Errc::field_mismatch, "bivariate mul");
  if (a.is_zero() || b.is_zero()) return BPoly(a.fld_);
  std::vector<FpPoly> c(a.c_.size() + b.c_.size() - 1, FpPoly(a.fld_));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return BPoly(a.fld_, std::move(c));
}

BPoly BPoly::times_x(size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<FpPoly> c(c_.size() + k, FpPoly(fld_));
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return BPoly(fld_, std::move(c));
}

BPoly BPoly::scaled(const FpPoly& s) const {
  if (s.is_zero()) return BPoly(fld_);
  if (s.is_one()) return *this;
  std::vector<FpPoly> c;
  c.reserve(c_.size());
  for (const FpPoly& p : c_) c.push_back(p * s);
  return BPoly(fld_, std::move(c));
}

BPoly BPoly::scaled_unit(uint16_t s) const {
  std::vector<FpPoly> c;
  c.reserve(c_.size());
  for (const FpPoly& p : c_) c.push_back(p.scaled(s));
  return BPoly(fld_, std::move(c));
}

BPoly BPoly::sqr() const {
  if (is_zero()) return *this;
  std::vector<FpPoly> c(2 * c_.size() - 1, FpPoly(fld_));
  for (size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i].sqr();
  return BPoly(fld_, std::move(c));
}

FpPoly BPoly::content() const {
  FpPoly g(fld_);
  for (const FpPoly& p : c_) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : FpPoly::gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

BPoly BPoly::primitive_part() const {
  if (is_zero()) return *this;
  FpPoly g = content();
  if (g.is_one()) return *this;
  std::vector<FpPoly> c;
  c.reserve(c_.size());
  for (const FpPoly& p : c_) c.push_back(p.is_zero() ? p : FpPoly::div_exact(p, g));
  return BPoly(fld_, std::move(c));
}

namespace {
// pseudo-remainder of a by b in x; b nonzero, result x-degree < xdeg(b)
BPoly pseudo_rem(BPoly a, const BPoly& b) {
  const FpPoly& d = b.lc();
  while (!a.is_zero() && a.xdeg() >= b.xdeg()) {
    const size_t sh = static_cast<size_t>(a.xdeg() - b.xdeg());
    a = a.scaled(d) + b.times_x(sh).scaled(a.lc());
  }
  return a;
}
}  // namespace

BPoly BPoly::gcd(const BPoly& a, const BPoly& b) {
  auto canon = [](BPoly p) {
    if (p.is_zero()) return p;
    const uint16_t u = p.lc().lc();
    return u == 1 ? p : p.scaled_unit(p.fld_.inv(u));
  };
  if (a.is_zero()) return canon(b);
  if (b.is_zero()) return canon(a);
  FpPoly cg = FpPoly::gcd(a.content(), b.content());
  BPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.xdeg() < v.xdeg()) std::swap(u, v);
  while (true) {
    BPoly r = pseudo_rem(u, v);
    if (r.is_zero()) break;
    u = std::move(v);
    v = r.primitive_part();
  }
  return canon(v.scaled(cg));
}

BPoly BPoly::div_exact(const BPoly& a, const BPoly& b) {
  require(a.fld_ == b.fld_, Errc::field_mismatch, "bivariate division");
  require(!b.is_zero(), Errc::division_by_zero, "bivariate division by zero");
  if (a.is_zero()) return a;
  BPoly r = a;
  std::vector<FpPoly> q(static_cast<size_t>(a.xdeg() - b.xdeg()) + 1, FpPoly(a.fld_));
  while (!r.is_zero() && r.xdeg() >= b.xdeg()) {
    FpPoly qc = FpPoly::div_exact(r.lc(), b.lc());
    const size_t sh = static_cast<size_t>(r.xdeg() - b.xdeg());
    q[sh] = qc;
    r = r + b.times_x(sh).scaled(qc);
  }
  require(r.is_zero(), Errc::internal_error, "inexact bivariate division");
  return BPoly(a.fld_, std::move(q));
}

int BPoly::x_valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

BPoly BPoly::shift_down_x(size_t k) const {
  if (k == 0 || is_zero()) return *this;
  require(x_valuation() >= static_cast<int>(k), Errc::internal_error, "x shift below valuation");
  return BPoly(fld_, std::vector<FpPoly>(c_.begin() + static_cast<long>(k), c_.end()));
}

std::pair<BPoly, BPoly> BPoly::split_even_odd_x() const {
  std::vector<FpPoly> e, o;
  e.reserve((c_.size() + 1) / 2);
  o.reserve(c_.size() / 2);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 0)
      e.push_back(c_[i]);
    else
      o.push_back(c_[i]);
  }
  return {BPoly(fld_, std::move(e)), BPoly(fld_, std::move(o))};
}

BPoly BPoly::compose_square_x() const {
  if (is_zero()) return *this;
  std::vector<FpPoly> c(2 * c_.size() - 1, FpPoly(fld_));
  for (size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
  return BPoly(fld_, std::move(c));
}

size_t BPoly::max_tdeg() const {
  int d = 0;
  for (const FpPoly& p : c_) d = std::max(d, p.degree());
  return static_cast<size_t>(std::max(d, 0));
}

size_t BPoly::coeff_count() const {
  size_t n = 0;
  for (const FpPoly& p : c_) n += p.coeff_count();
  return n;
}

}  // namespace ecid
