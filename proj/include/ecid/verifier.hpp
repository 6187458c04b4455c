#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ecid/constructor.hpp"

namespace ecid {

using ordered_json = nlohmann::ordered_json;

struct CheckResult {
  std::string id;
  bool pass = true;
  long long millis = 0;
  ordered_json counterexample;  // null unless the check failed
  ordered_json details;         // optional informational payload
};

// Degree growth of every element a check touches; the num/den split follows
// the reduced-fraction representation of both components of a + b*z.
struct Telemetry {
  size_t max_num_degree = 0;
  size_t max_den_degree = 0;
  void observe(const FieldElem& u);
  void merge(const Telemetry& other);
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  Telemetry telemetry;

  bool all_pass() const;
  const CheckResult* find(std::string_view id) const;
  CheckResult& add(std::string id);
};

inline constexpr uint64_t kDefaultSeed = 20260815;

// theta^(i) theta^(j) = binom(i+j, i) theta^(i+j) on the generators t, x, z
// for all i + j <= order, plus seeded random-element spot checks at half
// order. Generator checking suffices because the rule's validity set is a
// subfield.
VerificationReport check_iteration_rule(const HigherDerivation& hd, int order = -1,
                                        uint64_t seed = kDefaultSeed);

// every coefficient of the difference point lies in C(t), and the series
// satisfy the curve relation f^3 = g^2 + g
VerificationReport check_rho_commutes(const HigherDerivation& hd, int order = -1);

// Equivalent characterization of the iteration rule organized by 2-power
// blocks, checked for each l <= ell_max on the generators:
//   shift    theta^(m + 2^l) = theta^(2^l) o theta^(m)   for 0 <= m < 2^l
//   square   theta^(2^l) o theta^(2^l) = 0
//   commute  theta^(2^j) o theta^(2^l) = theta^(2^l) o theta^(2^j), j < l
// plus the block-coset membership of xi_{2^l} (check_choice_coset), the
// propagation rule xi_{m+2^l} = theta^(2^l)(xi_m) re-evaluated with the full
// table, and xi_m in L^2*C(t) for every m. Default ell_max is the largest l
// with 2^(l+1) <= N.
VerificationReport check_power_conditions(const HigherDerivation& hd, int ell_max = -1);

// theta^(2^j)( sum_{m < 2^l} theta^(m)(u) t^m ) = 0 for all j < l; the
// iteration rule below 2^l is checked first as a precondition row.
VerificationReport check_kernel_identity(const HigherDerivation& hd, int ell, const FieldElem& u,
                                         std::string_view label = "");

// Heuristic sweep for extra constants: monomials t^a x^b z^c with c <= 1 and
// a + b + c <= degree_bound, singly and in pairs, keeping those killed by
// every theta^(i), 0 < i <= order, and dropping the scalars of C. Absence is
// evidence, not proof.
std::vector<FieldElem> bounded_constant_search(const HigherDerivation& hd, int degree_bound,
                                               int order);

VerificationReport kernel_suite(const HigherDerivation& hd, uint64_t seed = kDefaultSeed);
VerificationReport constants_suite(const HigherDerivation& hd, int degree_bound = 3);

// fixed suite vocabulary: iteration, rho, thm51, kernel, torsion, constants,
// all ("thm51" selects check_power_conditions)
const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);
std::vector<VerificationReport> run_suites(const HigherDerivation& hd,
                                           const std::vector<std::string>& suites,
                                           uint64_t seed = kDefaultSeed);

// deterministic small random elements for spot checks
FieldElem random_small_elem(BinaryField f, uint64_t& state);

// Re-runs the single check a counterexample payload came from; true iff the
// failure reproduces. Supports the payload kinds emitted by this module.
bool replay(const HigherDerivation& hd, const ordered_json& counterexample);

}  // namespace ecid
