#include "ecid/fppoly.hpp"

#include <algorithm>
#include <bit>

#include "ecid/binom.hpp"

namespace ecid {

namespace {

// ---- word-packed kernels for coefficients in F2 ----

using Words = std::vector<uint64_t>;

size_t word_count(size_t bits) { return (bits + 63) / 64; }

Words pack(const std::vector<uint16_t>& c) {
  Words w(word_count(c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] & 1) w[i >> 6] |= uint64_t(1) << (i & 63);
  return w;
}

std::vector<uint16_t> unpack(const Words& w) {
  int top = -1;
  for (size_t i = w.size(); i-- > 0;)
    if (w[i]) {
      top = static_cast<int>(i * 64 + std::bit_width(w[i]) - 1);
      break;
    }
  std::vector<uint16_t> c(top + 1, 0);
  for (int i = 0; i <= top; ++i)
    c[i] = static_cast<uint16_t>((w[i >> 6] >> (i & 63)) & 1);
  return c;
}

int top_bit(const Words& w) {
  for (size_t i = w.size(); i-- > 0;)
    if (w[i]) return static_cast<int>(i * 64 + std::bit_width(w[i]) - 1);
  return -1;
}

void xor_shifted(Words& r, const Words& a, size_t shift) {
  const size_t ws = shift >> 6, bs = shift & 63;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    r[i + ws] ^= a[i] << bs;
    if (bs) r[i + ws + 1] ^= a[i] >> (64 - bs);
  }
}

Words f2_mul(const Words& a, int adeg, const Words& b, int bdeg) {
  Words r(word_count(static_cast<size_t>(adeg + bdeg) + 2), 0);
  for (int j = 0; j <= bdeg; ++j)
    if ((b[j >> 6] >> (j & 63)) & 1) xor_shifted(r, a, static_cast<size_t>(j));
  return r;
}

// divides a by b in place; returns quotient, leaves remainder in a
Words f2_divmod_inplace(Words& a, const Words& b, int bdeg) {
  int adeg = top_bit(a);
  Words q(adeg >= bdeg ? word_count(static_cast<size_t>(adeg - bdeg) + 1) : 1, 0);
  while (adeg >= bdeg) {
    const size_t sh = static_cast<size_t>(adeg - bdeg);
    q[sh >> 6] |= uint64_t(1) << (sh & 63);
    if (a.size() < word_count(static_cast<size_t>(adeg) + 1))
      a.resize(word_count(static_cast<size_t>(adeg) + 1), 0);
    xor_shifted(a, b, sh);
    adeg = top_bit(a);
  }
  return q;
}

}  // namespace

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly::FpPoly(BinaryField f, std::vector<uint16_t> coeffs) : fld_(f), c_(std::move(coeffs)) {
  for (uint16_t v : c_)
    require(v < fld_.order(), Errc::internal_error, "coefficient outside field");
  trim();
}

FpPoly FpPoly::constant(BinaryField f, uint16_t c) {
  return FpPoly(f, std::vector<uint16_t>{c});
}

FpPoly FpPoly::monomial(BinaryField f, size_t deg, uint16_t c) {
  std::vector<uint16_t> v(deg + 1, 0);
  v[deg] = c;
  return FpPoly(f, std::move(v));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require(a.fld_ == b.fld_, Errc::field_mismatch, "poly add");
  std::vector<uint16_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<uint16_t>(a.coeff(i) ^ b.coeff(i));
  return FpPoly(a.fld_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require(a.fld_ == b.fld_, Errc::field_mismatch, "poly mul");
  if (a.is_zero() || b.is_zero()) return FpPoly(a.fld_);
  if (a.fld_.degree() == 1) {
    Words r = f2_mul(pack(a.c_), a.degree(), pack(b.c_), b.degree());
    return FpPoly(a.fld_, unpack(r));
  }
  std::vector<uint16_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j]) c[i + j] ^= a.fld_.mul(a.c_[i], b.c_[j]);
  }
  return FpPoly(a.fld_, std::move(c));
}

FpPoly FpPoly::scaled(uint16_t s) const {
  if (s == 0) return FpPoly(fld_);
  if (s == 1) return *this;
  std::vector<uint16_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = fld_.mul(c_[i], s);
  return FpPoly(fld_, std::move(c));
}

FpPoly FpPoly::times_monomial(size_t k, uint16_t c) const {
  if (is_zero() || c == 0) return FpPoly(fld_);
  std::vector<uint16_t> v(c_.size() + k, 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i + k] = fld_.mul(c_[i], c);
  return FpPoly(fld_, std::move(v));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(fld_.inv(lc()));
}

FpPoly FpPoly::sqr() const {
  if (is_zero()) return *this;
  std::vector<uint16_t> c(2 * c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[2 * i] = fld_.sqr(c_[i]);
  return FpPoly(fld_, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  require(a.fld_ == b.fld_, Errc::field_mismatch, "poly divmod");
  require(!b.is_zero(), Errc::division_by_zero, "poly division by zero");
  if (a.degree() < b.degree()) return {FpPoly(a.fld_), a};
  if (a.fld_.degree() == 1) {
    Words r = pack(a.c_);
    Words q = f2_divmod_inplace(r, pack(b.c_), b.degree());
    return {FpPoly(a.fld_, unpack(q)), FpPoly(a.fld_, unpack(r))};
  }
  std::vector<uint16_t> r = a.c_;
  std::vector<uint16_t> q(a.c_.size() - b.c_.size() + 1, 0);
  const uint16_t binv = a.fld_.inv(b.lc());
  for (int d = a.degree(); d >= b.degree(); --d) {
    const uint16_t f = a.fld_.mul(r[static_cast<size_t>(d)], binv);
    if (!f) continue;
    const size_t off = static_cast<size_t>(d - b.degree());
    q[off] = f;
    for (size_t i = 0; i < b.c_.size(); ++i)
      r[off + i] ^= a.fld_.mul(f, b.c_[i]);
  }
  return {FpPoly(a.fld_, std::move(q)), FpPoly(a.fld_, std::move(r))};
}

FpPoly FpPoly::div_exact(const FpPoly& a, const FpPoly& b) {
  auto [q, r] = divmod(a, b);
  require(r.is_zero(), Errc::internal_error, "inexact poly division");
  return q;
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  if (a.fld_.degree() == 1) {
    Words wa = pack(a.c_), wb = pack(b.c_);
    while (top_bit(wb) >= 0) {
      f2_divmod_inplace(wa, wb, top_bit(wb));
      std::swap(wa, wb);
    }
    return FpPoly(a.fld_, unpack(wa));
  }
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly FpPoly::hasse_deriv(size_t j) const {
  if (j >= c_.size()) return FpPoly(fld_);
  std::vector<uint16_t> r(c_.size() - j, 0);
  for (size_t i = 0; i < r.size(); ++i)
    if (binom_mod2(i, j)) r[i] = c_[i + j];
  return FpPoly(fld_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::split_even_odd() const {
  std::vector<uint16_t> e((c_.size() + 1) / 2, 0), o(c_.size() / 2, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 0)
      e[i / 2] = c_[i];
    else
      o[i / 2] = c_[i];
  }
  return {FpPoly(fld_, std::move(e)), FpPoly(fld_, std::move(o))};
}

FpPoly FpPoly::compose_square() const { return compose_power2(1); }

FpPoly FpPoly::compose_power2(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  const size_t step = size_t(1) << k;
  std::vector<uint16_t> c((c_.size() - 1) * step + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  return FpPoly(fld_, std::move(c));
}

GfElem FpPoly::eval(const GfElem& v) const {
  require(v.fld == fld_, Errc::field_mismatch, "poly eval");
  GfElem acc = GfElem::zero_of(fld_);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * v + GfElem(c_[i], fld_);
  return acc;
}

}  // namespace ecid
