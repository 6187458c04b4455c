#include "doctest.h"

#include "ecid/bivar.hpp"
#include "ecid/tower.hpp"

#include "oracles.hpp"

using ecid::BinaryField;
using ecid::BPoly;
using ecid::Errc;
using ecid::FpPoly;
using ecid::Rat;
using ecid::XRat;

namespace {

// schoolbook product on raw x-coefficient vectors; FpPoly arithmetic is
// already oracle-tested
BPoly naive_bmul(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return BPoly(a.field());
  std::vector<FpPoly> r(static_cast<size_t>(a.xdeg() + b.xdeg()) + 1, FpPoly(a.field()));
  for (int i = 0; i <= a.xdeg(); ++i)
    for (int j = 0; j <= b.xdeg(); ++j)
      r[static_cast<size_t>(i + j)] =
          r[static_cast<size_t>(i + j)] + a.coeff(static_cast<size_t>(i)) * b.coeff(static_cast<size_t>(j));
  return BPoly(a.field(), std::move(r));
}

// renormalize a gcd-shaped polynomial: leading t-coefficient of the leading
// x-coefficient becomes 1
BPoly unit_normalized(const BPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled_unit(p.field().inv(p.lc().lc()));
}

}  // namespace

TEST_CASE("bivariate product matches the schoolbook oracle") {
  for (unsigned m : {1u, 2u}) {
    BinaryField f(m);
    oracle::Rng rng(600 + m);
    for (int r = 0; r < 100; ++r) {
      BPoly a = oracle::rand_bpoly(rng, f, 4, 6);
      BPoly b = oracle::rand_bpoly(rng, f, 4, 6);
      CHECK_EQ(a * b, naive_bmul(a, b));
      CHECK_EQ(a + b, b + a);
      CHECK_EQ(a.sqr(), a * a);
    }
  }
}

TEST_CASE("content and primitive part factor the polynomial") {
  BinaryField f(1);
  oracle::Rng rng(11);
  for (int r = 0; r < 100; ++r) {
    BPoly p = oracle::rand_bpoly(rng, f, 4, 5);
    FpPoly c = p.content();
    BPoly pp = p.primitive_part();
    CHECK_EQ(pp.scaled(c), p);
    if (!p.is_zero()) {
      CHECK_EQ(c.lc(), 1);
      CHECK(pp.content().is_one());
      // multiplying by a t-polynomial scales the content
      FpPoly s = oracle::rand_poly_nonzero(rng, f, 4);
      CHECK_EQ(p.scaled(s).content(), (c * s).monic());
    } else {
      CHECK(c.is_zero());
    }
  }
}

TEST_CASE("gcd divides both arguments and absorbs common factors") {
  BinaryField f(1);
  oracle::Rng rng(12);
  for (int r = 0; r < 60; ++r) {
    BPoly a = oracle::rand_bpoly(rng, f, 3, 4);
    BPoly b = oracle::rand_bpoly(rng, f, 3, 4);
    BPoly g = BPoly::gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK_EQ(g.lc().lc(), 1);
    if (!a.is_zero()) CHECK_EQ(BPoly::div_exact(a, g) * g, a);
    if (!b.is_zero()) CHECK_EQ(BPoly::div_exact(b, g) * g, b);

    BPoly c = oracle::rand_bpoly_nonzero(rng, f, 2, 3);
    BPoly g2 = BPoly::gcd(a * c, b * c);
    // gcd(ac, bc) = gcd(a,b) * c up to a scalar unit
    CHECK_EQ(g2, unit_normalized(g * c));
  }
}

TEST_CASE("div_exact inverts multiplication") {
  BinaryField f(2);
  oracle::Rng rng(13);
  for (int r = 0; r < 80; ++r) {
    BPoly a = oracle::rand_bpoly(rng, f, 3, 4);
    BPoly b = oracle::rand_bpoly_nonzero(rng, f, 3, 4);
    CHECK_EQ(BPoly::div_exact(a * b, b), a);
  }
}

TEST_CASE("x valuation and shifts") {
  BinaryField f(1);
  BPoly x2 = BPoly::monomial_x(f, 2);
  BPoly p = x2 + BPoly::monomial_x(f, 5);
  CHECK_EQ(p.x_valuation(), 2);
  CHECK_EQ(p.shift_down_x(2), BPoly::constant(f, 1) + BPoly::monomial_x(f, 3));
  CHECK_EQ(BPoly(f).x_valuation(), -1);
  CHECK_EQ(p.times_x(3).x_valuation(), 5);
  CHECK_EQ(p.times_x(3).shift_down_x(3), p);
}

TEST_CASE("even-odd split in x round-trips") {
  BinaryField f(1);
  oracle::Rng rng(14);
  for (int r = 0; r < 80; ++r) {
    BPoly p = oracle::rand_bpoly(rng, f, 6, 3);
    auto [e, o] = p.split_even_odd_x();
    CHECK_EQ(p, e.compose_square_x() + o.compose_square_x().times_x(1));
    CHECK_EQ(p.compose_square_x().split_even_odd_x().first, p);
    CHECK(p.compose_square_x().split_even_odd_x().second.is_zero());
  }
}

TEST_CASE("reduced fraction form is unique") {
  BinaryField f(1);
  oracle::Rng rng(15);
  for (int r = 0; r < 60; ++r) {
    BPoly a = oracle::rand_bpoly(rng, f, 3, 3);
    BPoly b = oracle::rand_bpoly_nonzero(rng, f, 3, 3);
    BPoly c = oracle::rand_bpoly_nonzero(rng, f, 2, 2);
    XRat u(a * c, b * c);
    CHECK_EQ(u, XRat(a, b));
    const bool reduced = BPoly::gcd(u.num(), u.den()).is_one() || u.num().is_zero();
    CHECK(reduced);
    CHECK_EQ(u.den().lc().lc(), 1);
  }
  CHECK_EQ(oracle::code_of([&] { (void)XRat(BPoly::constant(f, 1), BPoly(f)); }),
           Errc::division_by_zero);
}

TEST_CASE("tower fraction field operations") {
  BinaryField f(1);
  oracle::Rng rng(16);
  for (int r = 0; r < 50; ++r) {
    XRat u = oracle::rand_xrat(rng, f, 2, 3);
    XRat v = oracle::rand_xrat(rng, f, 2, 3);
    XRat w = oracle::rand_xrat(rng, f, 1, 2);
    CHECK_EQ(u + v, v + u);
    CHECK_EQ((u + v) + w, u + (v + w));
    CHECK_EQ(u * (v + w), u * v + u * w);
    CHECK_EQ(u + u, u.zero());
    CHECK_EQ(u.sqr(), u * u);
    if (!u.is_zero()) {
      CHECK_EQ(u * u.inv(), u.one());
      CHECK_EQ(v / u, v * u.inv());
    }
  }
  CHECK_EQ(oracle::code_of([&] { XRat(f).inv(); }), Errc::division_by_zero);
}

TEST_CASE("x-square subfield membership and descent") {
  BinaryField f(1);
  XRat x = XRat::var_x(f);
  XRat t = XRat::var_t(f);
  XRat one = x.one();

  CHECK_FALSE(x.in_x_square_subfield());
  CHECK(x.sqr().in_x_square_subfield());
  CHECK(t.in_x_square_subfield());  // no x at all
  CHECK((t * x.sqr() + t * t).in_x_square_subfield());
  CHECK_FALSE((one / x).in_x_square_subfield());
  CHECK((one / x.sqr()).in_x_square_subfield());
  CHECK_EQ(x.sqr().descend_x_square(), x);
  CHECK_EQ(oracle::code_of([&] { x.descend_x_square(); }), Errc::not_in_subfield);

  oracle::Rng rng(17);
  for (int r = 0; r < 50; ++r) {
    XRat v = oracle::rand_xrat(rng, f, 3, 3);
    XRat cs = v.compose_square_x();
    CHECK(cs.in_x_square_subfield());
    CHECK_EQ(cs.descend_x_square(), v);
    XRat u = oracle::rand_xrat(rng, f, 2, 2);
    CHECK_EQ((u + v).compose_square_x(), u.compose_square_x() + v.compose_square_x());
    CHECK_EQ((u * v).compose_square_x(), u.compose_square_x() * v.compose_square_x());
  }
}

TEST_CASE("base-field embedding and projection") {
  BinaryField f(1);
  oracle::Rng rng(18);
  for (int r = 0; r < 60; ++r) {
    Rat u = oracle::rand_rat(rng, f, 5);
    XRat lifted = XRat::from_rat(u);
    CHECK(lifted.is_t_only());
    CHECK_EQ(lifted.to_rat(), u);
  }
  CHECK_FALSE(XRat::var_x(f).is_t_only());
  CHECK_EQ(oracle::code_of([&] { XRat::var_x(f).to_rat(); }), Errc::not_in_subfield);
}

TEST_CASE("tower form divides through by the leading denominator coefficient") {
  BinaryField f(1);
  oracle::Rng rng(19);
  for (int r = 0; r < 40; ++r) {
    XRat u = oracle::rand_xrat(rng, f, 3, 3);
    auto tf = u.tower_form();
    if (u.is_zero()) continue;
    REQUIRE_FALSE(tf.den_c.empty());
    CHECK(tf.den_c.back().is_one());  // denominator monic in x over C(t)
    // reassemble both sides over a common denominator and compare with u
    CHECK_EQ(tf.num_c.size(), static_cast<size_t>(u.num().xdeg()) + 1);
    CHECK_EQ(tf.den_c.size(), static_cast<size_t>(u.den().xdeg()) + 1);
    for (size_t i = 0; i < tf.num_c.size(); ++i) {
      Rat want = Rat::of(u.num().coeff(i)) / Rat::of(u.den().lc());
      CHECK_EQ(tf.num_c[i], want);
    }
    for (size_t i = 0; i < tf.den_c.size(); ++i) {
      Rat want = Rat::of(u.den().coeff(i)) / Rat::of(u.den().lc());
      CHECK_EQ(tf.den_c[i], want);
    }
  }
}

TEST_CASE("degree telemetry counts both sides of the fraction") {
  BinaryField f(1);
  XRat x = XRat::var_x(f);
  XRat t = XRat::var_t(f);
  XRat u = (t * t * x + t) / (x * x * x + t.one());
  CHECK_EQ(u.max_tdeg(), 2u);
  CHECK_EQ(u.max_xdeg(), 3u);
  // num stores t (2 slots) and t^2 (3 slots); den stores 1 and the leading 1
  CHECK_EQ(u.coeff_count(), 7u);
  CHECK_EQ(XRat(f).max_tdeg(), 0u);
}
