#pragma once

#include <utility>
#include <vector>

#include "ecid/ratfunc.hpp"

namespace ecid {

// Polynomial in x with coefficients in GF(2^m)[t]; coefficients ascending in
// x, trimmed. Zero has an empty coefficient vector and x-degree -1.
class BPoly {
 public:
  explicit BPoly(BinaryField f) : fld_(f) {}
  BPoly(BinaryField f, std::vector<FpPoly> coeffs);

  static BPoly of(FpPoly p);
  static BPoly constant(BinaryField f, uint16_t c) { return of(FpPoly::constant(f, c)); }
  static BPoly monomial_x(BinaryField f, size_t k) {
    return of(FpPoly::constant(f, 1)).times_x(k);
  }

  const BinaryField& field() const { return fld_; }
  int xdeg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const FpPoly& coeff(size_t i) const;
  const FpPoly& lc() const;

  friend BPoly operator+(const BPoly& a, const BPoly& b);
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend bool operator==(const BPoly&, const BPoly&) = default;

  BPoly times_x(size_t k) const;
  BPoly scaled(const FpPoly& s) const;
  BPoly scaled_unit(uint16_t s) const;
  BPoly sqr() const;

  // monic gcd of the t-coefficients; zero polynomial has zero content
  FpPoly content() const;
  BPoly primitive_part() const;

  // gcd via content split and a primitive remainder sequence; the result's
  // leading x-coefficient has leading t-coefficient 1
  static BPoly gcd(const BPoly& a, const BPoly& b);
  // exact quotient; b must divide a
  static BPoly div_exact(const BPoly& a, const BPoly& b);

  // lowest x exponent with nonzero coefficient; -1 for zero
  int x_valuation() const;
  // exact quotient by x^k; k must not exceed the valuation
  BPoly shift_down_x(size_t k) const;

  // p = e(x^2) + x*o(x^2) over C(t); returns (e, o) with halved x-exponents
  std::pair<BPoly, BPoly> split_even_odd_x() const;
  // p with x -> x^2
  BPoly compose_square_x() const;

  size_t max_tdeg() const;
  size_t coeff_count() const;

 private:
  BinaryField fld_;
  std::vector<FpPoly> c_;
  void trim();
};

}  // namespace ecid
