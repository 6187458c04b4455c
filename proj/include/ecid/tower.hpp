#pragma once

#include <vector>

#include "ecid/bivar.hpp"

namespace ecid {

// Element of C(t)(x) held as a reduced fraction of integral bivariate
// polynomials: gcd(num, den) = 1 in GF(2^m)[t][x] (content included) and the
// leading t-coefficient of den's leading x-coefficient is 1. That
// representative is unique, so structural equality is value equality. The
// tower view (coefficients in C(t), denominator monic in x) is derived on
// demand for printing.
class XRat {
 public:
  explicit XRat(BinaryField f) : num_(f), den_(BPoly::constant(f, 1)) {}
  XRat(BPoly num, BPoly den);

  static XRat of(BPoly p);
  static XRat from_rat(const Rat& r);
  static XRat constant(BinaryField f, uint16_t c) { return of(BPoly::constant(f, c)); }
  static XRat var_x(BinaryField f) { return of(BPoly::monomial_x(f, 1)); }
  static XRat var_t(BinaryField f) { return of(BPoly::of(FpPoly::monomial(f, 1))); }

  const BPoly& num() const { return num_; }
  const BPoly& den() const { return den_; }
  const BinaryField& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  XRat zero() const { return XRat(field()); }
  XRat one() const { return constant(field(), 1); }

  friend XRat operator+(const XRat& a, const XRat& b);
  friend XRat operator-(const XRat& a, const XRat& b) { return a + b; }
  friend XRat operator*(const XRat& a, const XRat& b);
  friend XRat operator/(const XRat& a, const XRat& b);
  XRat inv() const;
  XRat sqr() const;
  XRat times_x(size_t k) const;
  friend bool operator==(const XRat&, const XRat&) = default;

  // in the subfield C(t)(x^2)?
  bool in_x_square_subfield() const;
  // value as a function of y = x^2, expressed in the same class with the
  // variable now meaning y; throws not_in_subfield
  XRat descend_x_square() const;
  // substitute x -> x^2
  XRat compose_square_x() const;

  bool is_t_only() const { return num_.xdeg() <= 0 && den_.xdeg() <= 0; }
  Rat to_rat() const;

  size_t max_tdeg() const;
  size_t max_xdeg() const;
  size_t coeff_count() const { return num_.coeff_count() + den_.coeff_count(); }

  // coefficients of num and den over C(t) after dividing both by den's
  // leading x-coefficient; ascending in x
  struct TowerForm {
    std::vector<Rat> num_c, den_c;
  };
  TowerForm tower_form() const;

 private:
  BPoly num_, den_;
  XRat(BPoly num, BPoly den, bool already_reduced);
  void reduce_full();
  void normalize_unit();
};

}  // namespace ecid
