#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ecid/gf2m.hpp"

namespace ecid {

// Univariate polynomial over GF(2^m), coefficients ascending, trimmed so the
// back entry is nonzero. Zero polynomial has an empty coefficient vector and
// degree -1. When m == 1, multiplication, division, and gcd run on
// word-packed bit vectors.
class FpPoly {
 public:
  explicit FpPoly(BinaryField f) : fld_(f) {}
  FpPoly(BinaryField f, std::vector<uint16_t> coeffs);

  static FpPoly constant(BinaryField f, uint16_t c);
  static FpPoly monomial(BinaryField f, size_t deg, uint16_t c = 1);

  const BinaryField& field() const { return fld_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  uint16_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint16_t lc() const { return c_.empty() ? 0 : c_.back(); }
  size_t coeff_count() const { return c_.size(); }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  FpPoly scaled(uint16_t c) const;
  FpPoly times_monomial(size_t k, uint16_t c = 1) const;
  FpPoly monic() const;
  FpPoly sqr() const;

  // quotient and remainder; b must be nonzero
  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
  // exact quotient; remainder must vanish
  static FpPoly div_exact(const FpPoly& a, const FpPoly& b);
  // monic gcd; gcd(0, 0) = 0
  static FpPoly gcd(FpPoly a, FpPoly b);

  // coefficient of T^j in p(t+T)
  FpPoly hasse_deriv(size_t j) const;
  // p = e(t^2) + t*o(t^2); returns (e, o) with halved exponents
  std::pair<FpPoly, FpPoly> split_even_odd() const;
  // p(t^2)
  FpPoly compose_square() const;
  // p(t^(2^k))
  FpPoly compose_power2(unsigned k) const;

  GfElem eval(const GfElem& v) const;

 private:
  BinaryField fld_;
  std::vector<uint16_t> c_;
  void trim();
};

}  // namespace ecid
