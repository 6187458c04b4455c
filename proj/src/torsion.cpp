#include "ecid/torsion.hpp"

#include <algorithm>
#include <chrono>

#include "ecid/textio.hpp"

namespace ecid {

namespace {

using Clock = std::chrono::steady_clock;

long long millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

FieldElem poly_elem(const FpPoly& c) { return FieldElem::from_xrat(XRat::of(BPoly::of(c))); }

// p(t, sx) by Horner in x; coefficients stay t-polynomials
FieldElem horner_xz(const BPoly& p, const FieldElem& sx) {
  if (p.is_zero()) return FieldElem(p.field());
  FieldElem acc = poly_elem(p.coeff(static_cast<size_t>(p.xdeg())));
  for (int i = p.xdeg() - 1; i >= 0; --i) {
    acc = acc * sx;
    const FpPoly& c = p.coeff(static_cast<size_t>(i));
    if (!c.is_zero()) acc = acc + poly_elem(c);
  }
  return acc;
}

}  // namespace

std::string point_str(const ProjPoint<GfElem>& p) {
  if (p.is_infinity()) return "infinity";
  return "(" + gf_str(p.affine().x) + "," + gf_str(p.affine().z) + ")";
}

std::vector<ProjPoint<GfElem>> curve_points(BinaryField f) {
  std::vector<ProjPoint<GfElem>> pts;
  pts.push_back(ProjPoint<GfElem>::infinity(GfElem::zero_of(f)));
  for (uint16_t xc = 0; xc < f.order(); ++xc)
    for (uint16_t zc = 0; zc < f.order(); ++zc) {
      GfElem x(xc, f), z(zc, f);
      if (on_curve(x, z)) pts.push_back(ProjPoint<GfElem>::at({x, z}));
    }
  return pts;
}

std::vector<TorsionPoint> enumerate_3_torsion() {
  const BinaryField gf4(2);
  std::vector<TorsionPoint> pts = curve_points(gf4);
  require(pts.size() == 9, Errc::internal_error, "GF(4) point census must be 9");
  const ProjPoint<GfElem> neutral = translated_neutral(GfElem::zero_of(gf4));
  for (const TorsionPoint& p : pts)
    require(mul_n(p, 3) == neutral, Errc::internal_error, "GF(4) point of order other than 3");
  return pts;
}

GeneratorImages translate_generators(const TorsionPoint& tau) {
  const BinaryField f = tau.sample().field();
  const FieldElem x = FieldElem::x(f), z = FieldElem::z(f);
  const ProjPoint<FieldElem> eta = ProjPoint<FieldElem>::at(AffinePoint<FieldElem>::checked(x, z));
  const ProjPoint<FieldElem> tp =
      tau.is_infinity()
          ? ProjPoint<FieldElem>::infinity(x)
          : ProjPoint<FieldElem>::at(AffinePoint<FieldElem>::checked(
                FieldElem::from_scalar(tau.affine().x), FieldElem::from_scalar(tau.affine().z)));
  const ProjPoint<FieldElem> r = translated_add(eta, tp);
  require(!r.is_infinity(), Errc::internal_error, "translated generic point left the affine chart");
  return {r.affine().x, r.affine().z};
}

FieldElem substitute_xz(const FieldElem& u, const FieldElem& sx, const FieldElem& sz) {
  const XRat& a = u.a();
  const XRat& b = u.b();
  const bool bz = b.is_zero();
  const BPoly n1 = bz ? a.num() : a.num() * b.den();
  const BPoly d = bz ? a.den() : a.den() * b.den();
  FieldElem num = horner_xz(n1, sx);
  if (!bz) num = num + horner_xz(b.num() * a.den(), sx) * sz;
  if (d.is_one()) return num;
  return num * horner_xz(d, sx).inv();
}

FieldElem apply_translation(const FieldElem& u, const GeneratorImages& gi) {
  return substitute_xz(u, gi.x, gi.z);
}

HigherDerivation lift_constants(const HigherDerivation& hd, BinaryField target) {
  if (target == hd.field()) return hd;
  require(target.degree() % hd.field().degree() == 0, Errc::field_mismatch,
          "constant field extension must contain the base");
  std::vector<FieldElem> xi;
  xi.reserve(static_cast<size_t>(hd.order()));
  for (int m = 1; m <= hd.order(); ++m) xi.push_back(parse_elem(elem_str(hd.xi(m)), target));
  return HigherDerivation::make(target, hd.order(), std::move(xi), hd.choices(), false);
}

VerificationReport check_id_automorphism(const HigherDerivation& hd_in, const TorsionPoint& tau,
                                         int order) {
  const BinaryField gf4 = tau.sample().field();
  require(gf4.degree() == 2, Errc::field_mismatch, "torsion point must have GF(4) coordinates");
  const HigherDerivation hd = lift_constants(hd_in, gf4);
  const int n = hd.order();
  if (order < 0) order = n;
  require(order >= 1 && order <= n, Errc::order_exceeded, "commutation order beyond table");

  VerificationReport rep;
  rep.suite = "torsion";
  const GeneratorImages gi = translate_generators(tau);
  const std::string tname = point_str(tau);

  struct Target {
    const char* name;
    FieldElem image;
  };
  const Target targets[2] = {{"x", gi.x}, {"z", gi.z}};
  for (const Target& tg : targets) {
    CheckResult& row = rep.add("torsion/tau=" + tname + "/u=" + std::string(tg.name));
    const auto start = Clock::now();
    const Tps<FieldElem> rhs = hd.theta(tg.image, order);
    for (int i = 1; i <= order; ++i) {
      const FieldElem table_val = tg.name[0] == 'x' ? hd.xi(i) : hd.zcoef(i);
      const FieldElem lhs = apply_translation(table_val, gi);
      rep.telemetry.observe(lhs);
      rep.telemetry.observe(rhs[i]);
      if (lhs == rhs[i]) continue;
      row.pass = false;
      row.counterexample = {{"kind", "torsion-commute"},
                            {"tau", tname},
                            {"u", tg.name},
                            {"i", i},
                            {"translate_then_theta", elem_str(rhs[i])},
                            {"theta_then_translate", elem_str(lhs)}};
      break;
    }
    row.millis = millis_since(start);
  }
  return rep;
}

VerificationReport no_rational_2_torsion(int k_max) {
  require(k_max >= 1 && k_max <= 8, Errc::order_exceeded,
          "two-torsion scan supports GF(2^k) for k <= 8");
  VerificationReport rep;
  rep.suite = "torsion";
  for (int k = 1; k <= k_max; ++k) {
    CheckResult& row = rep.add("torsion/two-torsion/k=" + std::to_string(k));
    const auto start = Clock::now();
    const BinaryField f(static_cast<unsigned>(k));
    const ProjPoint<GfElem> neutral = translated_neutral(GfElem::zero_of(f));
    const std::vector<ProjPoint<GfElem>> pts = curve_points(f);
    for (const ProjPoint<GfElem>& p : pts) {
      const bool doubles_to_neutral = mul_n(p, 2) == neutral;
      if (doubles_to_neutral == (p == neutral)) continue;
      row.pass = false;
      row.counterexample = {{"kind", "two-torsion"}, {"k", k}, {"point", point_str(p)}};
      break;
    }
    row.details = {{"points", pts.size()}};
    row.millis = millis_since(start);
  }
  return rep;
}

VerificationReport torsion_suite(const HigherDerivation& hd, int order_cap) {
  VerificationReport rep;
  rep.suite = "torsion";
  const BinaryField gf4(2);
  const std::vector<TorsionPoint> pts = enumerate_3_torsion();
  {
    CheckResult& row = rep.add("torsion/points");
    const auto start = Clock::now();
    int affine = 0;
    for (const TorsionPoint& p : pts)
      if (!p.is_infinity()) ++affine;
    if (pts.size() != 9 || affine != 8) {
      row.pass = false;
      row.counterexample = {{"kind", "torsion-count"}, {"points", pts.size()}, {"affine", affine}};
    }
    row.details = {{"points", pts.size()}, {"affine", affine}};
    row.millis = millis_since(start);
  }

  {
    CheckResult& row = rep.add("torsion/group");
    const auto start = Clock::now();
    auto member = [&](const ProjPoint<GfElem>& q) {
      return std::any_of(pts.begin(), pts.end(), [&](const TorsionPoint& p) { return p == q; });
    };
    for (const TorsionPoint& p : pts) {
      if (!member(translated_neg(p))) {
        row.pass = false;
        row.counterexample = {{"kind", "torsion-group"}, {"missing-inverse", point_str(p)}};
        break;
      }
      for (const TorsionPoint& q : pts)
        if (!member(translated_add(p, q))) {
          row.pass = false;
          row.counterexample = {{"kind", "torsion-group"},
                                {"p", point_str(p)},
                                {"q", point_str(q)},
                                {"sum", point_str(translated_add(p, q))}};
          break;
        }
      if (!row.pass) break;
    }
    row.millis = millis_since(start);
  }

  {
    CheckResult& row = rep.add("torsion/composition");
    const auto start = Clock::now();
    std::vector<GeneratorImages> gis;
    gis.reserve(pts.size());
    for (const TorsionPoint& p : pts) gis.push_back(translate_generators(p));
    auto images_of = [&](const ProjPoint<GfElem>& q) {
      for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == q) return gis[i];
      fail(Errc::internal_error, "translated sum left the torsion set");
    };
    for (size_t i = 0; i < pts.size() && row.pass; ++i)
      for (size_t j = 0; j < pts.size() && row.pass; ++j) {
        const GeneratorImages composed{apply_translation(gis[j].x, gis[i]),
                                       apply_translation(gis[j].z, gis[i])};
        const GeneratorImages direct = images_of(translated_add(pts[i], pts[j]));
        if (composed.x == direct.x && composed.z == direct.z) continue;
        row.pass = false;
        row.counterexample = {{"kind", "torsion-composition"},
                              {"tau", point_str(pts[i])},
                              {"tau2", point_str(pts[j])}};
      }
    row.millis = millis_since(start);
  }

  {
    VerificationReport two = no_rational_2_torsion(4);
    for (CheckResult& c : two.checks) rep.checks.push_back(std::move(c));
    rep.telemetry.merge(two.telemetry);
  }

  const HigherDerivation hd4 = lift_constants(hd, gf4);
  const int ord = std::min(hd4.order(), order_cap);
  for (const TorsionPoint& tau : pts) {
    VerificationReport one = check_id_automorphism(hd4, tau, ord);
    for (CheckResult& c : one.checks) rep.checks.push_back(std::move(c));
    rep.telemetry.merge(one.telemetry);
  }
  return rep;
}

}  // namespace ecid
