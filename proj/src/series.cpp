#include "ecid/series.hpp"

namespace ecid {

Tps<Rat> poly_shift(const FpPoly& p, int order) {
  Tps<Rat> r(order, Rat::of(p));
  for (int j = 1; j <= order; ++j) {
    FpPoly h = p.hasse_deriv(static_cast<size_t>(j));
    if (!h.is_zero()) r.set_coeff(j, Rat::of(std::move(h)));
  }
  return r;
}

Tps<Rat> taylor_shift(const Rat& r, int order) {
  Tps<Rat> num = poly_shift(r.num(), order);
  if (r.is_polynomial()) return num;
  return num * poly_shift(r.den(), order).inv();
}

Tps<FieldElem> solve_artin_schreier(const Tps<FieldElem>& xs, const FieldElem& z0) {
  Tps<FieldElem> cube = xs.sqr() * xs;
  require(cube[0] == z0.sqr() + z0, Errc::off_curve, "z0^2 + z0 != x0^3");
  Tps<FieldElem> zs = xs.zero();
  zs.set_coeff(0, z0);
  for (int m = 1; m <= xs.order(); ++m) {
    FieldElem v = cube[m];
    if (m % 2 == 0) v = v + zs[m / 2].sqr();
    zs.set_coeff(m, std::move(v));
  }
  require(zs.sqr() + zs == cube, Errc::internal_error, "artin-schreier residual");
  return zs;
}

}  // namespace ecid
