#pragma once

#include "ecid/fppoly.hpp"

namespace ecid {

// Rational function over GF(2^m) in one variable, kept reduced with a monic
// denominator. That representative is unique, so structural equality is
// value equality.
class Rat {
 public:
  explicit Rat(BinaryField f) : num_(f), den_(FpPoly::constant(f, 1)) {}
  Rat(FpPoly num, FpPoly den);

  static Rat of(FpPoly p);
  static Rat constant(BinaryField f, uint16_t c) { return of(FpPoly::constant(f, c)); }
  static Rat var(BinaryField f) { return of(FpPoly::monomial(f, 1)); }

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  const BinaryField& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rat zero() const { return Rat(field()); }
  Rat one() const { return constant(field(), 1); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b) { return a + b; }
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat inv() const;
  Rat sqr() const;
  friend bool operator==(const Rat&, const Rat&) = default;

  // membership in the subfield generated by the square of the variable
  bool in_square_subfield() const;
  // r = R(v^2) -> R; throws not_in_subfield
  Rat descend_square() const;
  // R -> R(v^2)
  Rat compose_square() const;
  // R -> R(v^(2^k))
  Rat compose_power2(unsigned k) const;

  GfElem eval(const GfElem& v) const;

 private:
  FpPoly num_, den_;
  void normalize();
};

}  // namespace ecid
