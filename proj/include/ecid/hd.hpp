#pragma once

#include <span>
#include <string>
#include <vector>

#include "ecid/series.hpp"

namespace ecid {

// Evaluation core for a higher derivation theta on L determined by its
// values on the generators: theta(t) = t+T always, theta(x) and theta(z)
// given as series whose constant terms are x and z. theta(u) substitutes
// t -> t+T, x -> theta(x), z -> theta(z) after clearing fractions, so one
// application costs a single series inversion.
class ThetaContext {
 public:
  ThetaContext(Tps<FieldElem> tx, Tps<FieldElem> tz);
  // tx from the xi table (coefficient m is xi[m-1]), tz solved from
  // theta(z)^2 + theta(z) = theta(x)^3 with constant term z
  static ThetaContext from_table(BinaryField f, std::span<const FieldElem> xi);

  int order() const { return tx_.order(); }
  const BinaryField& field() const { return tx_[0].field(); }
  const Tps<FieldElem>& theta_x() const { return tx_; }
  const Tps<FieldElem>& theta_z() const { return tz_; }

  ThetaContext truncated(int ord) const;
  Tps<FieldElem> theta(const FieldElem& u, int ord = -1) const;
  FieldElem theta_coeff(const FieldElem& u, int m) const;

 private:
  Tps<FieldElem> tx_, tz_;
};

// theta^(m) on an element of L^2 C(t) computed through the decomposition
// u = alpha(t, x^2) + beta(t, x^2) z^2 and the substitutions
// x^2 -> theta(x)^2, z^2 -> theta(z)^2. Squares kill odd slots, so the
// result depends only on table entries up to floor(m/2); zc holds the
// theta(z) coefficients starting at zc[0] = z.
FieldElem theta_coeff_protected(BinaryField f, std::span<const FieldElem> xi,
                                std::span<const FieldElem> zc, const FieldElem& u, int m);

// Higher-derivation data: order N, table xi_1..xi_N of theta^(m)(x), the
// derived theta(z) coefficients, and the textual choice list that produced
// the table (empty for hand-made tables).
class HigherDerivation {
 public:
  static HigherDerivation make(BinaryField f, int order, std::vector<FieldElem> xi,
                               std::vector<std::string> choices, bool enforce_membership);
  static HigherDerivation trivial(BinaryField f, int order);

  int order() const { return ctx_.order(); }
  const BinaryField& field() const { return ctx_.field(); }
  const FieldElem& xi(int m) const;     // 1-based
  const FieldElem& zcoef(int m) const;  // 0-based; zcoef(0) = z
  std::span<const FieldElem> xi_table() const { return xi_; }
  const std::vector<std::string>& choices() const { return choices_; }
  bool membership_checked() const { return membership_checked_; }
  const ThetaContext& ctx() const { return ctx_; }

  Tps<FieldElem> theta(const FieldElem& u, int ord = -1) const { return ctx_.theta(u, ord); }
  FieldElem theta_coeff(const FieldElem& u, int m) const { return ctx_.theta_coeff(u, m); }
  // theta^(i)(theta^(j)(u))
  FieldElem theta_compose(const FieldElem& u, int i, int j) const;
  FieldElem theta_coeff_protected(const FieldElem& u, int m) const;

 private:
  HigherDerivation(std::vector<FieldElem> xi, std::vector<std::string> choices,
                   ThetaContext ctx, bool checked);
  std::vector<FieldElem> xi_;
  std::vector<std::string> choices_;
  ThetaContext ctx_;
  bool membership_checked_;
};

}  // namespace ecid
