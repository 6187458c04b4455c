#include "doctest.h"

#include "ecid/field_elem.hpp"

#include "oracles.hpp"

using ecid::BinaryField;
using ecid::Errc;
using ecid::FieldElem;
using ecid::GfElem;
using ecid::Rat;
using ecid::XRat;

namespace {
const BinaryField F2(1);
FieldElem T() { return FieldElem::t(F2); }
FieldElem X() { return FieldElem::x(F2); }
FieldElem Z() { return FieldElem::z(F2); }
}  // namespace

TEST_CASE("z satisfies the Artin-Schreier relation") {
  FieldElem z = Z(), x = X();
  CHECK_EQ(z * z + z, x * x * x);
  CHECK_EQ(z.sqr(), z + x * x * x);
  // direct product formula: (a1+b1 z)(a2+b2 z) = a1a2 + b1b2 x^3 + (a1b2+a2b1+b1b2) z
  oracle::Rng rng(21);
  for (int r = 0; r < 40; ++r) {
    FieldElem u = oracle::rand_elem(rng, F2, 2, 2);
    FieldElem v = oracle::rand_elem(rng, F2, 2, 2);
    XRat x3 = XRat::var_x(F2) * XRat::var_x(F2) * XRat::var_x(F2);
    FieldElem want(u.a() * v.a() + u.b() * v.b() * x3,
                   u.a() * v.b() + u.b() * v.a() + u.b() * v.b());
    CHECK_EQ(u * v, want);
  }
}

TEST_CASE("quadratic extension is a field") {
  oracle::Rng rng(22);
  for (int r = 0; r < 40; ++r) {
    FieldElem u = oracle::rand_elem(rng, F2, 2, 2);
    FieldElem v = oracle::rand_elem(rng, F2, 2, 2);
    FieldElem w = oracle::rand_elem(rng, F2, 1, 1);
    CHECK_EQ(u + v, v + u);
    CHECK_EQ(u * v, v * u);
    CHECK_EQ((u * v) * w, u * (v * w));
    CHECK_EQ(u * (v + w), u * v + u * w);
    CHECK_EQ(u + u, u.zero());
    CHECK_EQ(u.sqr(), u * u);
    if (!u.is_zero()) {
      CHECK_EQ(u * u.inv(), u.one());
      CHECK_EQ(v / u, v * u.inv());
    }
  }
  CHECK_EQ(oracle::code_of([&] { FieldElem::zero_of(F2).inv(); }), Errc::division_by_zero);
  // inverses with a genuine z part: 1/z = (z+1)/x^3 since z(z+1) = x^3
  FieldElem z = Z(), x = X();
  CHECK_EQ(z.inv(), (z + z.one()) / (x * x * x));
}

TEST_CASE("embeddings from the scalar, rational, and tower layers") {
  CHECK_EQ(FieldElem::from_scalar(GfElem::one_of(F2)), FieldElem::one_of(F2));
  CHECK(FieldElem::from_scalar(GfElem::zero_of(F2)).is_zero());
  Rat rt = Rat::var(F2);
  CHECK_EQ(FieldElem::from_rat(rt), T());
  CHECK_EQ(FieldElem::from_xrat(XRat::var_x(F2)), X());
  oracle::Rng rng(23);
  for (int r = 0; r < 40; ++r) {
    Rat u = oracle::rand_rat(rng, F2, 5);
    FieldElem e = FieldElem::from_rat(u);
    CHECK(e.in_base_rat());
    CHECK_EQ(e.to_base_rat(), u);
  }
  CHECK_FALSE(X().in_base_rat());
  CHECK_FALSE(Z().in_base_rat());
  CHECK_EQ(oracle::code_of([&] { X().to_base_rat(); }), Errc::not_in_subfield);
}

TEST_CASE("square subring membership") {
  FieldElem t = T(), x = X(), z = Z();
  // reachable as alpha(t,x^2) + beta(t,x^2) z^2 with z^2 = z + x^3
  CHECK(t.in_square_subring());
  CHECK((x * x).in_square_subring());
  CHECK(z.sqr().in_square_subring());
  CHECK(FieldElem::one_of(F2).in_square_subring());
  CHECK(FieldElem::zero_of(F2).in_square_subring());
  CHECK_FALSE(x.in_square_subring());
  CHECK_FALSE(z.in_square_subring());
  CHECK_FALSE((x * z.sqr()).in_square_subring());
  CHECK((x * x * z.sqr()).in_square_subring());
  CHECK(((x * x * x) + z).in_square_subring());  // equals z^2

  oracle::Rng rng(24);
  for (int r = 0; r < 30; ++r) {
    FieldElem u = oracle::rand_elem(rng, F2, 2, 2);
    Rat c = oracle::rand_rat(rng, F2, 3);
    FieldElem v = u.sqr() * FieldElem::from_rat(c);  // an L^2 C(t) element
    CHECK(v.in_square_subring());
    auto d = v.square_decompose();
    CHECK_EQ(FieldElem::square_recompose(d), v);
    // decomposition components live in y = x^2: recompose must expand them
    FieldElem back(d.alpha.compose_square_x(), XRat(F2));
    FieldElem zz = Z().sqr();
    CHECK_EQ(back + FieldElem::from_xrat(d.beta.compose_square_x()) * zz, v);
  }
  CHECK_EQ(oracle::code_of([&] { X().square_decompose(); }), Errc::not_in_subfield);
}

TEST_CASE("degree telemetry spans both coordinates") {
  FieldElem t = T(), x = X(), z = Z();
  FieldElem u = t * t * t * x + z * (x * x / (t + FieldElem::one_of(F2)));
  CHECK_EQ(u.max_tdeg(), 3u);
  CHECK_EQ(u.max_xdeg(), 2u);
  CHECK_GT(u.coeff_count(), 0u);
  CHECK_EQ(FieldElem::zero_of(F2).max_tdeg(), 0u);
}
