#pragma once

#include <cstdint>

#include "ecid/errors.hpp"

namespace ecid {

// GF(2^m) for 1 <= m <= 8. Elements are bit vectors over F2 packed into the
// low m bits of a uint16_t. The reduction modulus for each m is the
// irreducible polynomial of degree m whose bit pattern, read as an integer
// with the leading term included, is smallest.
class BinaryField {
 public:
  BinaryField() : m_(1) {}
  explicit BinaryField(unsigned m);

  static BinaryField gf2() { return BinaryField(1); }

  unsigned degree() const { return m_; }
  uint32_t modulus() const;
  unsigned order() const { return 1u << m_; }

  friend bool operator==(const BinaryField&, const BinaryField&) = default;

  uint16_t add(uint16_t a, uint16_t b) const { return a ^ b; }
  uint16_t mul(uint16_t a, uint16_t b) const;
  uint16_t sqr(uint16_t a) const { return mul(a, a); }
  uint16_t pow(uint16_t a, uint64_t e) const;
  uint16_t inv(uint16_t a) const;

 private:
  unsigned m_;
};

// Element paired with its field; value type for API boundaries.
struct GfElem {
  uint16_t code = 0;
  BinaryField fld;

  GfElem() = default;
  GfElem(uint16_t c, BinaryField f) : code(c), fld(f) {}

  static GfElem zero_of(BinaryField f) { return {0, f}; }
  static GfElem one_of(BinaryField f) { return {1, f}; }

  const BinaryField& field() const { return fld; }
  bool is_zero() const { return code == 0; }
  bool is_one() const { return code == 1; }
  GfElem zero() const { return {0, fld}; }
  GfElem one() const { return {1, fld}; }
  GfElem inv() const { return {fld.inv(code), fld}; }
  GfElem sqr() const { return {fld.sqr(code), fld}; }

  friend GfElem operator+(const GfElem& a, const GfElem& b) {
    require(a.fld == b.fld, Errc::field_mismatch, "GfElem add");
    return {static_cast<uint16_t>(a.code ^ b.code), a.fld};
  }
  friend GfElem operator-(const GfElem& a, const GfElem& b) { return a + b; }
  friend GfElem operator*(const GfElem& a, const GfElem& b) {
    require(a.fld == b.fld, Errc::field_mismatch, "GfElem mul");
    return {a.fld.mul(a.code, b.code), a.fld};
  }
  friend GfElem operator/(const GfElem& a, const GfElem& b) { return a * b.inv(); }
  friend bool operator==(const GfElem&, const GfElem&) = default;
};

}  // namespace ecid
