#include "ecid/constructor.hpp"

#include <utility>

#include "ecid/ec_group.hpp"
#include "ecid/textio.hpp"

namespace ecid {

namespace {

FieldElem t_power(BinaryField f, int m) {
  return FieldElem::from_rat(Rat::of(FpPoly::monomial(f, static_cast<size_t>(m))));
}

Tps<FieldElem> constant_series(int order, const FieldElem& c) { return Tps<FieldElem>(order, c); }

}  // namespace

DifferenceSeries compute_f_g(const ThetaContext& ctx, int order) {
  if (order < 0) order = ctx.order();
  require(order <= ctx.order(), Errc::order_exceeded, "difference series order beyond table");
  const BinaryField f = ctx.field();
  using S = Tps<FieldElem>;
  AffinePoint<S> generic{constant_series(order, FieldElem::x(f)),
                         constant_series(order, FieldElem::z(f))};
  AffinePoint<S> shifted{ctx.theta_x().truncated(order), ctx.theta_z().truncated(order)};
  AffinePoint<S> d = affine_sub(generic, shifted);
  require(d.x[0].is_zero() && d.z[0].is_zero(), Errc::internal_error,
          "difference point must be neutral at T = 0");
  return {std::move(d.x), std::move(d.z)};
}

DifferenceSeries compute_f_g(const HigherDerivation& hd, int order) {
  return compute_f_g(hd.ctx(), order);
}

Tps<FieldElem> difference_slope(const ThetaContext& ctx, int order) {
  require(order >= 0 && order <= ctx.order(), Errc::order_exceeded, "slope order beyond table");
  const BinaryField f = ctx.field();
  const FieldElem x = FieldElem::x(f), z = FieldElem::z(f);
  const FieldElem w = (x.one() + z).inv();
  Tps<FieldElem> num = ctx.theta_z().truncated(order) + constant_series(order, z * w);
  Tps<FieldElem> den = ctx.theta_x().truncated(order) + constant_series(order, x * w);
  return num * den.inv();
}

FieldElem ftilde(const ThetaContext& ctx, int ell) {
  require(ell >= 0, Errc::internal_error, "negative block index");
  if (ell == 0) return FieldElem(ctx.field());
  const int h = 1 << (ell - 1);
  require(ctx.order() >= h, Errc::insufficient_data,
          "ftilde needs the table through half the block index");
  return difference_slope(ctx, h)[h];
}

FieldElem ftilde(const BuildState& st, int ell) {
  require(ell >= 0, Errc::internal_error, "negative block index");
  if (ell == 0) return FieldElem(st.fld);
  const int h = 1 << (ell - 1);
  require(static_cast<int>(st.xi.size()) >= h, Errc::insufficient_data,
          "ftilde needs the table through half the block index");
  return ftilde(st.context().truncated(h), ell);
}

ChoiceList ChoiceList::parse(BinaryField f, std::span<const std::string> texts) {
  ChoiceList cl;
  for (const std::string& s : texts) {
    cl.entries.push_back(parse_rat(s, f, 's'));
    cl.texts.push_back(s);
  }
  return cl;
}

BuildState BuildState::empty(BinaryField f) {
  return BuildState{f, {}, {FieldElem::z(f)}};
}

ThetaContext BuildState::context() const {
  require(zc.size() == xi.size() + 1, Errc::internal_error, "z table out of step with xi table");
  const int n = static_cast<int>(xi.size());
  Tps<FieldElem> tx(n, FieldElem::x(fld)), tz(n, FieldElem::z(fld));
  for (int m = 1; m <= n; ++m) {
    tx.set_coeff(m, xi[static_cast<size_t>(m - 1)]);
    tz.set_coeff(m, zc[static_cast<size_t>(m)]);
  }
  return ThetaContext(std::move(tx), std::move(tz));
}

namespace {

void refresh_z(BuildState& st) {
  ThetaContext ctx = ThetaContext::from_table(st.fld, st.xi);
  st.zc.clear();
  for (int m = 0; m <= ctx.order(); ++m) st.zc.push_back(ctx.theta_z()[m]);
}

// theta^(2^l)(xi_m) for m = 1..2^l-1 via the protected evaluation; slot 0
// is unused padding
std::vector<FieldElem> protected_block(const BuildState& st, int ell) {
  const int blk = 1 << ell;
  std::vector<FieldElem> out;
  out.reserve(static_cast<size_t>(blk));
  out.emplace_back(st.fld);
  for (int m = 1; m < blk; ++m)
    out.push_back(
        theta_coeff_protected(st.fld, st.xi, st.zc, st.xi[static_cast<size_t>(m - 1)], blk));
  return out;
}

FieldElem block_sum(BinaryField f, std::span<const FieldElem> thetap) {
  FieldElem s(f);
  for (size_t m = 1; m < thetap.size(); ++m)
    s = s + thetap[m] * t_power(f, static_cast<int>(m));
  return s;
}

}  // namespace

void extend_block(BuildState& st, int ell, const Rat& c_sub, int cap) {
  const BinaryField f = st.fld;
  require(ell >= 0, Errc::internal_error, "negative block index");
  const int blk = 1 << ell;
  require(static_cast<int>(st.xi.size()) >= blk - 1, Errc::insufficient_data,
          "block extension needs the full previous table");
  require(static_cast<int>(st.xi.size()) == blk - 1, Errc::internal_error,
          "block already extended");
  require(cap >= blk, Errc::internal_error, "extension cap below block start");

  {
    Rat v = c_sub;
    for (int j = 0; j <= ell; ++j) {
      require(v.in_square_subfield(), Errc::choice_not_in_subfield,
              "block choice must be a rational function of t^(2^(l+1))");
      v = v.descend_square();
    }
  }

  const std::vector<FieldElem> thetap = protected_block(st, ell);
  const FieldElem s_sum = block_sum(f, thetap);

  ThetaContext ctx = st.context();
  const Tps<FieldElem> ft = ctx.theta(ftilde(ctx, ell), blk - 1);
  FieldElem w_sum(f);
  for (int m = 0; m < blk; ++m) w_sum = w_sum + ft[m] * t_power(f, m);

  FieldElem head = s_sum + w_sum.sqr() + FieldElem::from_rat(c_sub);
  require(head.in_square_subring(), Errc::membership_violation,
          "block value left L^2*C(t)");
  st.xi.push_back(std::move(head));
  for (int m = 1; m < blk && blk + m <= cap; ++m) {
    require(thetap[static_cast<size_t>(m)].in_square_subring(), Errc::membership_violation,
            "propagated table entry left L^2*C(t)");
    st.xi.push_back(thetap[static_cast<size_t>(m)]);
  }
  refresh_z(st);
}

bool check_choice_coset(const BuildState& st, int ell, const FieldElem& candidate) {
  require(ell >= 0, Errc::internal_error, "negative block index");
  const int blk = 1 << ell;
  require(static_cast<int>(st.xi.size()) >= blk - 1, Errc::insufficient_data,
          "coset check needs the full previous table");
  BuildState prefix{st.fld, {st.xi.begin(), st.xi.begin() + (blk - 1)},
                    {st.zc.begin(), st.zc.begin() + blk}};
  const std::vector<FieldElem> thetap = protected_block(prefix, ell);
  const FieldElem v = candidate + block_sum(st.fld, thetap);
  if (!v.in_square_subring()) return false;
  ThetaContext ctx = prefix.context();
  for (int j = 0; (1 << j) < blk; ++j)
    if (!ctx.theta_coeff(v, 1 << j).is_zero()) return false;
  return theta_coeff_protected(st.fld, prefix.xi, prefix.zc, v, blk).is_zero();
}

HigherDerivation construct(BinaryField f, int order, const ChoiceList& choices) {
  require(order >= 1, Errc::internal_error, "construction order must be at least 1");
  BuildState st = BuildState::empty(f);
  std::vector<std::string> used;
  for (int ell = 0; (1 << ell) <= order; ++ell) {
    const bool given = ell < static_cast<int>(choices.entries.size());
    Rat c = given ? choices.entries[static_cast<size_t>(ell)].compose_power2(
                        static_cast<unsigned>(ell + 1))
                  : Rat(f);
    used.push_back(given ? choices.texts[static_cast<size_t>(ell)] : "0");
    extend_block(st, ell, c, order);
  }
  return HigherDerivation::make(f, order, std::move(st.xi), std::move(used), true);
}

}  // namespace ecid
