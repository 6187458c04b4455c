#include "doctest.h"

#include "ecid/gf2m.hpp"

#include "oracles.hpp"

using ecid::BinaryField;
using ecid::Errc;
using ecid::GfElem;

TEST_CASE("modulus is the least irreducible of its degree") {
  for (unsigned m = 2; m <= 8; ++m) {
    BinaryField f(m);
    CHECK_EQ(f.modulus(), oracle::least_irreducible(m));
    CHECK(oracle::f2_irreducible(f.modulus()));
  }
}

TEST_CASE("field constructor rejects out-of-range degrees") {
  CHECK_EQ(oracle::code_of([] { BinaryField f(0); }), Errc::internal_error);
  CHECK_EQ(oracle::code_of([] { BinaryField f(9); }), Errc::internal_error);
}

TEST_CASE("multiplication matches reduction of the carry-less product") {
  for (unsigned m = 1; m <= 8; ++m) {
    BinaryField f(m);
    oracle::Rng rng(101 + m);
    const int reps = m <= 4 ? 0 : 500;  // small fields exhaustively, big ones sampled
    if (m <= 4) {
      for (uint32_t a = 0; a < f.order(); ++a)
        for (uint32_t b = 0; b < f.order(); ++b) {
          const uint64_t want =
              m == 1 ? (a & b) : oracle::f2_mod_bits(oracle::f2_mul_bits(a, b), f.modulus());
          CHECK_EQ(f.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b)), want);
        }
    }
    for (int r = 0; r < reps; ++r) {
      const uint16_t a = static_cast<uint16_t>(rng.below(f.order()));
      const uint16_t b = static_cast<uint16_t>(rng.below(f.order()));
      CHECK_EQ(f.mul(a, b), oracle::f2_mod_bits(oracle::f2_mul_bits(a, b), f.modulus()));
    }
  }
}

TEST_CASE("field axioms hold exhaustively for small degrees") {
  for (unsigned m = 1; m <= 4; ++m) {
    BinaryField f(m);
    const uint32_t q = f.order();
    for (uint32_t a = 0; a < q; ++a) {
      const uint16_t ua = static_cast<uint16_t>(a);
      CHECK_EQ(f.mul(ua, 1), ua);
      CHECK_EQ(f.mul(ua, 0), 0);
      for (uint32_t b = 0; b < q; ++b) {
        const uint16_t ub = static_cast<uint16_t>(b);
        CHECK_EQ(f.mul(ua, ub), f.mul(ub, ua));
        for (uint32_t c = 0; c < q; ++c) {
          const uint16_t uc = static_cast<uint16_t>(c);
          CHECK_EQ(f.mul(f.mul(ua, ub), uc), f.mul(ua, f.mul(ub, uc)));
          CHECK_EQ(f.mul(ua, f.add(ub, uc)), f.add(f.mul(ua, ub), f.mul(ua, uc)));
        }
      }
    }
  }
}

TEST_CASE("every nonzero element has a multiplicative inverse") {
  for (unsigned m = 1; m <= 8; ++m) {
    BinaryField f(m);
    for (uint32_t a = 1; a < f.order(); ++a) {
      const uint16_t ua = static_cast<uint16_t>(a);
      CHECK_EQ(f.mul(ua, f.inv(ua)), 1);
      CHECK_EQ(f.pow(ua, f.order() - 1), 1);  // Lagrange: a^(q-1) = 1
    }
    CHECK_EQ(oracle::code_of([&] { f.inv(0); }), Errc::division_by_zero);
  }
}

TEST_CASE("Frobenius is additive") {
  for (unsigned m : {2u, 5u, 8u}) {
    BinaryField f(m);
    for (uint32_t a = 0; a < f.order(); ++a)
      for (uint32_t b = 0; b < f.order(); ++b) {
        const uint16_t ua = static_cast<uint16_t>(a), ub = static_cast<uint16_t>(b);
        CHECK_EQ(f.sqr(f.add(ua, ub)), f.add(f.sqr(ua), f.sqr(ub)));
      }
  }
}

TEST_CASE("pow handles large exponents by squaring") {
  BinaryField f(8);
  oracle::Rng rng(7);
  for (int r = 0; r < 50; ++r) {
    const uint16_t a = static_cast<uint16_t>(1 + rng.below(f.order() - 1));
    const uint64_t e = rng.next() % 100000;
    uint16_t want = 1;
    for (uint64_t i = 0; i < e % 511; ++i) want = f.mul(want, a);
    // a has order dividing 255, so reduce the exponent before the naive loop
    CHECK_EQ(f.pow(a, e % 511), want);
    CHECK_EQ(f.pow(a, e), f.pow(a, e % 255));
  }
  CHECK_EQ(f.pow(0, 0), 1);  // empty product convention
  CHECK_EQ(f.pow(0, 5), 0);
}

TEST_CASE("GfElem wraps codes with field checks") {
  BinaryField f4(2), f8(3);
  GfElem a(2, f4), b(3, f4);
  CHECK_EQ((a + b).code, 1);
  CHECK_EQ((a * a.inv()).code, 1);
  CHECK(GfElem::zero_of(f4).is_zero());
  CHECK(GfElem::one_of(f4).is_one());
  CHECK_EQ(a.zero(), GfElem::zero_of(f4));
  CHECK_EQ(a.one(), GfElem::one_of(f4));
  CHECK_EQ(a.sqr(), a * a);
  CHECK_EQ(a / b, a * b.inv());
  CHECK_EQ(a - b, a + b);  // char 2
  GfElem c(1, f8);
  CHECK_EQ(oracle::code_of([&] { (void)(a + c); }), Errc::field_mismatch);
  CHECK_EQ(oracle::code_of([&] { (void)(a * c); }), Errc::field_mismatch);
  CHECK_EQ(oracle::code_of([&] { GfElem::zero_of(f4).inv(); }), Errc::division_by_zero);
}
