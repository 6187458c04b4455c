#include "ecid/gf2m.hpp"

#include <bit>

namespace ecid {

namespace {
// kModulus[m] holds the full modulus bits, degree-m term included.
// m = 1 is F2 itself; the entry keeps the pattern (t) for uniformity but is
// never used for reduction since products of single bits need none.
constexpr uint32_t kModulus[9] = {
    0,
    0b10,         // t
    0b111,        // t^2+t+1
    0b1011,       // t^3+t+1
    0b10011,      // t^4+t+1
    0b100101,     // t^5+t^2+1
    0b1000011,    // t^6+t+1
    0b10000011,   // t^7+t+1
    0b100011011,  // t^8+t^4+t^3+t+1
};
}  // namespace

BinaryField::BinaryField(unsigned m) : m_(m) {
  require(m >= 1 && m <= 8, Errc::internal_error, "field degree out of range");
}

uint32_t BinaryField::modulus() const { return kModulus[m_]; }

uint16_t BinaryField::mul(uint16_t a, uint16_t b) const {
  if (m_ == 1) return a & b & 1;
  uint32_t acc = 0;
  uint32_t aa = a;
  for (uint32_t bb = b; bb; bb >>= 1, aa <<= 1)
    if (bb & 1) acc ^= aa;
  const uint32_t mod = kModulus[m_];
  for (int w = std::bit_width(acc); w > static_cast<int>(m_); w = std::bit_width(acc))
    acc ^= mod << (w - 1 - m_);
  return static_cast<uint16_t>(acc);
}

uint16_t BinaryField::pow(uint16_t a, uint64_t e) const {
  uint16_t r = 1;
  uint16_t base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint16_t BinaryField::inv(uint16_t a) const {
  require(a != 0, Errc::division_by_zero, "inverse of zero in GF(2^m)");
  return pow(a, order() - 2);
}

}  // namespace ecid
