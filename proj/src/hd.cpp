#include "ecid/hd.hpp"

namespace ecid {

namespace {

// series of a t-polynomial under t -> t+T, lifted into L
Tps<FieldElem> lift_shifted(const FpPoly& p, int ord) {
  Tps<FieldElem> r(ord, FieldElem::from_xrat(XRat::of(BPoly::of(p))));
  for (int j = 1; j <= ord; ++j) {
    FpPoly h = p.hasse_deriv(static_cast<size_t>(j));
    if (!h.is_zero()) r.set_coeff(j, FieldElem::from_xrat(XRat::of(BPoly::of(std::move(h)))));
  }
  return r;
}

// P(t+T, S) for a bivariate integral polynomial P and series S
Tps<FieldElem> horner(const BPoly& p, const Tps<FieldElem>& s) {
  const int ord = s.order();
  if (p.is_zero()) return s.zero();
  Tps<FieldElem> acc = lift_shifted(p.coeff(static_cast<size_t>(p.xdeg())), ord);
  for (int i = p.xdeg() - 1; i >= 0; --i) {
    acc = acc * s;
    const FpPoly& c = p.coeff(static_cast<size_t>(i));
    if (!c.is_zero()) acc = acc + lift_shifted(c, ord);
  }
  return acc;
}

// substitute the generator images into u = A + Bz after clearing fractions
Tps<FieldElem> substitute(const FieldElem& u, const Tps<FieldElem>& sx,
                          const Tps<FieldElem>& sz) {
  const XRat& a = u.a();
  const XRat& b = u.b();
  const bool bz = b.is_zero();
  const BPoly n1 = bz ? a.num() : a.num() * b.den();
  const BPoly d = bz ? a.den() : a.den() * b.den();
  Tps<FieldElem> num = horner(n1, sx);
  if (!bz) {
    const BPoly n2 = b.num() * a.den();
    num = num + horner(n2, sx) * sz;
  }
  if (d.is_one()) return num;
  return num * horner(d, sx).inv();
}

}  // namespace

ThetaContext::ThetaContext(Tps<FieldElem> tx, Tps<FieldElem> tz)
    : tx_(std::move(tx)), tz_(std::move(tz)) {
  require(tx_.order() == tz_.order(), Errc::order_mismatch, "generator series orders differ");
  const BinaryField f = tx_[0].field();
  require(tx_[0] == FieldElem::x(f) && tz_[0] == FieldElem::z(f), Errc::internal_error,
          "generator series must start at x and z");
}

ThetaContext ThetaContext::from_table(BinaryField f, std::span<const FieldElem> xi) {
  const int ord = static_cast<int>(xi.size());
  Tps<FieldElem> tx(ord, FieldElem::x(f));
  for (int m = 1; m <= ord; ++m) tx.set_coeff(m, xi[static_cast<size_t>(m - 1)]);
  return ThetaContext(tx, solve_artin_schreier(tx, FieldElem::z(f)));
}

ThetaContext ThetaContext::truncated(int ord) const {
  return ThetaContext(tx_.truncated(ord), tz_.truncated(ord));
}

Tps<FieldElem> ThetaContext::theta(const FieldElem& u, int ord) const {
  if (ord < 0) ord = order();
  require(ord <= order(), Errc::order_exceeded, "theta beyond table order");
  if (ord == order()) return substitute(u, tx_, tz_);
  return substitute(u, tx_.truncated(ord), tz_.truncated(ord));
}

FieldElem ThetaContext::theta_coeff(const FieldElem& u, int m) const {
  require(m >= 0 && m <= order(), Errc::order_exceeded, "theta coefficient beyond order");
  return theta(u, m)[m];
}

FieldElem theta_coeff_protected(BinaryField f, std::span<const FieldElem> xi,
                                std::span<const FieldElem> zc, const FieldElem& u, int m) {
  require(m >= 0, Errc::internal_error, "negative order");
  const size_t h = static_cast<size_t>(m) / 2;
  require(xi.size() >= h, Errc::insufficient_data, "xi table too short for protected value");
  require(zc.size() >= h + 1, Errc::insufficient_data, "z table too short for protected value");
  FieldElem::SquareDecomp dec = u.square_decompose();

  Tps<FieldElem> x2(m, FieldElem::x(f).sqr());
  Tps<FieldElem> z2(m, FieldElem::z(f).sqr());
  for (size_t k = 1; k <= h; ++k) {
    x2.set_coeff(static_cast<int>(2 * k), xi[k - 1].sqr());
    z2.set_coeff(static_cast<int>(2 * k), zc[k].sqr());
  }

  const XRat& al = dec.alpha;
  const XRat& be = dec.beta;
  const bool bz = be.is_zero();
  const BPoly n1 = bz ? al.num() : al.num() * be.den();
  const BPoly d = bz ? al.den() : al.den() * be.den();
  Tps<FieldElem> num = horner(n1, x2);
  if (!bz) {
    const BPoly n2 = be.num() * al.den();
    num = num + horner(n2, x2) * z2;
  }
  if (d.is_one()) return num[m];
  return (num * horner(d, x2).inv())[m];
}

HigherDerivation::HigherDerivation(std::vector<FieldElem> xi, std::vector<std::string> choices,
                                   ThetaContext ctx, bool checked)
    : xi_(std::move(xi)),
      choices_(std::move(choices)),
      ctx_(std::move(ctx)),
      membership_checked_(checked) {}

HigherDerivation HigherDerivation::make(BinaryField f, int order, std::vector<FieldElem> xi,
                                        std::vector<std::string> choices,
                                        bool enforce_membership) {
  require(order >= 1, Errc::internal_error, "derivation order must be at least 1");
  require(static_cast<int>(xi.size()) == order, Errc::internal_error,
          "xi table size must equal the order");
  if (enforce_membership)
    for (size_t m = 0; m < xi.size(); ++m)
      require(xi[m].in_square_subring(), Errc::membership_violation,
              "xi entry outside L^2 C(t)");
  ThetaContext ctx = ThetaContext::from_table(f, xi);
  return HigherDerivation(std::move(xi), std::move(choices), std::move(ctx),
                          enforce_membership);
}

HigherDerivation HigherDerivation::trivial(BinaryField f, int order) {
  return make(f, order, std::vector<FieldElem>(static_cast<size_t>(order), FieldElem(f)), {},
              true);
}

const FieldElem& HigherDerivation::xi(int m) const {
  require(m >= 1 && m <= order(), Errc::order_exceeded, "xi index out of range");
  return xi_[static_cast<size_t>(m - 1)];
}

const FieldElem& HigherDerivation::zcoef(int m) const {
  require(m >= 0 && m <= order(), Errc::order_exceeded, "z coefficient out of range");
  return ctx_.theta_z()[m];
}

FieldElem HigherDerivation::theta_compose(const FieldElem& u, int i, int j) const {
  require(i >= 0 && i <= order() && j >= 0 && j <= order(), Errc::order_exceeded,
          "composition indices exceed order");
  return ctx_.theta_coeff(ctx_.theta_coeff(u, j), i);
}

FieldElem HigherDerivation::theta_coeff_protected(const FieldElem& u, int m) const {
  std::vector<FieldElem> zc;
  zc.reserve(static_cast<size_t>(order()) + 1);
  for (int k = 0; k <= order(); ++k) zc.push_back(zcoef(k));
  return ecid::theta_coeff_protected(field(), xi_, zc, u, m);
}

}  // namespace ecid
