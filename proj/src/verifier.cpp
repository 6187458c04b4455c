#include "ecid/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <utility>

#include "ecid/binom.hpp"
#include "ecid/textio.hpp"
#include "ecid/torsion.hpp"

namespace ecid {

namespace {

using Clock = std::chrono::steady_clock;

long long millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

FieldElem t_power(BinaryField f, int m) {
  return FieldElem::from_rat(Rat::of(FpPoly::monomial(f, static_cast<size_t>(m))));
}

struct NamedElem {
  std::string name;
  FieldElem value;
};

std::vector<NamedElem> generators(BinaryField f) {
  return {{"t", FieldElem::t(f)}, {"x", FieldElem::x(f)}, {"z", FieldElem::z(f)}};
}

int default_ell_max(int order) {
  int ell = -1;
  while ((2 << (ell + 1)) <= order) ++ell;
  return ell;
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t v = state;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

}  // namespace

void Telemetry::observe(const FieldElem& u) {
  auto part_deg = [](const BPoly& p) {
    return std::max(p.max_tdeg(), static_cast<size_t>(std::max(p.xdeg(), 0)));
  };
  for (const XRat* r : {&u.a(), &u.b()}) {
    max_num_degree = std::max(max_num_degree, part_deg(r->num()));
    max_den_degree = std::max(max_den_degree, part_deg(r->den()));
  }
}

void Telemetry::merge(const Telemetry& other) {
  max_num_degree = std::max(max_num_degree, other.max_num_degree);
  max_den_degree = std::max(max_den_degree, other.max_den_degree);
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view id) const {
  for (const CheckResult& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

CheckResult& VerificationReport::add(std::string id) {
  checks.push_back(CheckResult{std::move(id), true, 0, {}, {}});
  return checks.back();
}

FieldElem random_small_elem(BinaryField f, uint64_t& state) {
  const FieldElem t = FieldElem::t(f), x = FieldElem::x(f), z = FieldElem::z(f);
  auto monomial = [&] {
    FieldElem m = x.one();
    for (uint64_t a = splitmix64(state) % 4; a > 0; --a) m = m * t;
    for (uint64_t b = splitmix64(state) % 3; b > 0; --b) m = m * x;
    if (splitmix64(state) % 2) m = m * z;
    return m;
  };
  FieldElem u = monomial();
  if (splitmix64(state) % 2) u = u + monomial();
  if (splitmix64(state) % 4 == 0) u = u * (x + t + x.one()).inv();
  if (u.is_zero()) u = x + z;
  return u;
}

VerificationReport check_iteration_rule(const HigherDerivation& hd, int order, uint64_t seed) {
  const int n = hd.order();
  if (order < 0) order = n;
  require(order >= 1 && order <= n, Errc::order_exceeded, "iteration check order beyond table");
  VerificationReport rep;
  rep.suite = "iteration";
  const BinaryField f = hd.field();

  auto compose_rows = [&](const std::string& prefix, const FieldElem& u, int ord,
                          const std::string& u_text, bool one_row) {
    const Tps<FieldElem> full = hd.theta(u, ord);
    for (int i = 0; i <= ord; ++i) rep.telemetry.observe(full[i]);
    CheckResult* row = nullptr;
    if (one_row) row = &rep.add(prefix);
    const auto start = Clock::now();
    for (int j = 0; j <= ord; ++j) {
      if (!one_row) {
        row = &rep.add(prefix + "/j=" + std::to_string(j));
        row->millis = 0;
      }
      const auto row_start = Clock::now();
      const Tps<FieldElem> partial = hd.theta(full[j], ord - j);
      for (int i = 0; i <= ord - j; ++i) {
        rep.telemetry.observe(partial[i]);
        const FieldElem expected =
            binom_mod2(static_cast<uint64_t>(i), static_cast<uint64_t>(j)) ? full[i + j]
                                                                           : FieldElem(f);
        if (partial[i] == expected) continue;
        if (row->pass) {
          row->pass = false;
          row->counterexample = {{"kind", "iteration"},
                                 {"u", u_text},
                                 {"i", i},
                                 {"j", j},
                                 {"expected", elem_str(expected)},
                                 {"actual", elem_str(partial[i])}};
        }
      }
      if (!one_row) row->millis = millis_since(row_start);
    }
    if (one_row) row->millis = millis_since(start);
  };

  for (const NamedElem& g : generators(f))
    compose_rows("iteration/u=" + g.name, g.value, order, g.name, false);

  const int half = order / 2;
  if (half >= 1) {
    uint64_t state = seed;
    for (int k = 0; k < 10; ++k) {
      const FieldElem u = random_small_elem(f, state);
      compose_rows("iteration/sample=" + std::to_string(k), u, half, elem_str(u), true);
    }
  }
  return rep;
}

VerificationReport check_rho_commutes(const HigherDerivation& hd, int order) {
  const int n = hd.order();
  if (order < 0) order = n;
  require(order >= 1 && order <= n, Errc::order_exceeded, "rho check order beyond table");
  VerificationReport rep;
  rep.suite = "rho";

  const auto start = Clock::now();
  const DifferenceSeries ds = compute_f_g(hd, order);
  const long long setup = millis_since(start);
  for (int m = 0; m <= order; ++m) {
    CheckResult& row = rep.add("rho/m=" + std::to_string(m));
    const auto row_start = Clock::now();
    rep.telemetry.observe(ds.f[m]);
    rep.telemetry.observe(ds.g[m]);
    const char* bad = nullptr;
    if (!ds.f[m].in_base_rat())
      bad = "f";
    else if (!ds.g[m].in_base_rat())
      bad = "g";
    if (bad != nullptr) {
      row.pass = false;
      row.counterexample = {{"kind", "rho"},
                            {"coefficient", bad},
                            {"m", m},
                            {"value", elem_str(bad[0] == 'f' ? ds.f[m] : ds.g[m])}};
    }
    row.millis = (m == 0 ? setup : 0) + millis_since(row_start);
  }

  CheckResult& curve = rep.add("rho/curve");
  const auto cstart = Clock::now();
  const Tps<FieldElem> lhs = ds.f.sqr() * ds.f;
  const Tps<FieldElem> rhs = ds.g.sqr() + ds.g;
  if (lhs != rhs) {
    curve.pass = false;
    for (int m = 0; m <= order; ++m)
      if (lhs[m] != rhs[m]) {
        curve.counterexample = {{"kind", "rho-curve"},
                                {"m", m},
                                {"f_cubed", elem_str(lhs[m])},
                                {"g_artin_schreier", elem_str(rhs[m])}};
        break;
      }
  }
  curve.millis = millis_since(cstart);
  return rep;
}

VerificationReport check_power_conditions(const HigherDerivation& hd, int ell_max) {
  const int n = hd.order();
  if (ell_max < 0) ell_max = default_ell_max(n);
  require((1 << (ell_max + 1)) <= n || ell_max < 0, Errc::order_exceeded,
          "power-block conditions need 2^(l+1) <= N");
  VerificationReport rep;
  rep.suite = "thm51";
  const BinaryField f = hd.field();
  const FieldElem zero(f);

  for (int ell = 0; ell <= ell_max; ++ell) {
    const int blk = 1 << ell;
    for (const NamedElem& g : generators(f)) {
      {
        CheckResult& row = rep.add("thm51/l=" + std::to_string(ell) + "/shift/u=" + g.name);
        const auto start = Clock::now();
        const Tps<FieldElem> full = hd.theta(g.value, 2 * blk - 1);
        for (int m = 0; m < blk; ++m) {
          const FieldElem lhs = full[m + blk];
          const FieldElem rhs = hd.theta_coeff(full[m], blk);
          rep.telemetry.observe(rhs);
          if (lhs == rhs) continue;
          row.pass = false;
          row.counterexample = {{"kind", "shift"},  {"l", ell},
                                {"u", g.name},      {"m", m},
                                {"expected", elem_str(lhs)}, {"actual", elem_str(rhs)}};
          break;
        }
        row.millis = millis_since(start);
      }
      {
        CheckResult& row = rep.add("thm51/l=" + std::to_string(ell) + "/square/u=" + g.name);
        const auto start = Clock::now();
        const FieldElem v = hd.theta_compose(g.value, blk, blk);
        rep.telemetry.observe(v);
        if (!v.is_zero()) {
          row.pass = false;
          row.counterexample = {
              {"kind", "square"}, {"l", ell}, {"u", g.name}, {"value", elem_str(v)}};
        }
        row.millis = millis_since(start);
      }
      if (ell > 0) {
        CheckResult& row = rep.add("thm51/l=" + std::to_string(ell) + "/commute/u=" + g.name);
        const auto start = Clock::now();
        for (int j = 0; j < ell; ++j) {
          const FieldElem left = hd.theta_compose(g.value, 1 << j, blk);
          const FieldElem right = hd.theta_compose(g.value, blk, 1 << j);
          rep.telemetry.observe(left);
          rep.telemetry.observe(right);
          if (left == right) continue;
          row.pass = false;
          row.counterexample = {{"kind", "commute"}, {"l", ell},
                                {"j", j},            {"u", g.name},
                                {"left", elem_str(left)}, {"right", elem_str(right)}};
          break;
        }
        row.millis = millis_since(start);
      }
    }

    {
      CheckResult& row = rep.add("thm51/l=" + std::to_string(ell) + "/coset");
      const auto start = Clock::now();
      const std::span<const FieldElem> xi = hd.xi_table();
      BuildState prefix{f, {xi.begin(), xi.begin() + (blk - 1)}, {}};
      for (int m = 0; m < blk; ++m) prefix.zc.push_back(hd.zcoef(m));
      if (!check_choice_coset(prefix, ell, hd.xi(blk))) {
        row.pass = false;
        row.counterexample = {{"kind", "coset"}, {"l", ell}, {"candidate", elem_str(hd.xi(blk))}};
      }
      row.millis = millis_since(start);
    }

    {
      CheckResult& row = rep.add("thm51/l=" + std::to_string(ell) + "/propagation");
      const auto start = Clock::now();
      for (int m = 1; m < blk && m + blk <= n; ++m) {
        const FieldElem expected = hd.xi(m + blk);
        const FieldElem actual = hd.theta_coeff(hd.xi(m), blk);
        rep.telemetry.observe(actual);
        if (expected == actual) continue;
        row.pass = false;
        row.counterexample = {{"kind", "propagation"},
                              {"l", ell},
                              {"m", m},
                              {"expected", elem_str(expected)},
                              {"actual", elem_str(actual)}};
        break;
      }
      row.millis = millis_since(start);
    }
  }

  CheckResult& mem = rep.add("thm51/membership");
  const auto mstart = Clock::now();
  for (int m = 1; m <= n; ++m) {
    rep.telemetry.observe(hd.xi(m));
    if (hd.xi(m).in_square_subring()) continue;
    mem.pass = false;
    mem.counterexample = {{"kind", "membership"}, {"m", m}, {"value", elem_str(hd.xi(m))}};
    break;
  }
  mem.millis = millis_since(mstart);
  return rep;
}

VerificationReport check_kernel_identity(const HigherDerivation& hd, int ell, const FieldElem& u,
                                         std::string_view label) {
  const int n = hd.order();
  require(ell >= 0, Errc::internal_error, "negative block index");
  const int blk = 1 << ell;
  const int needed = blk + (ell > 0 ? blk / 2 : 0);
  require(needed <= n, Errc::order_exceeded, "kernel identity needs 2^l + 2^(l-1) <= N");
  VerificationReport rep;
  rep.suite = "kernel";
  const BinaryField f = hd.field();
  const std::string u_text = elem_str(u);
  const std::string prefix =
      "kernel/l=" + std::to_string(ell) + "/" + (label.empty() ? "u=" + u_text : std::string(label));

  const Tps<FieldElem> full = hd.theta(u, blk - 1);

  {
    CheckResult& row = rep.add(prefix + "/iteration-precondition");
    const auto start = Clock::now();
    for (int j = 0; j <= blk - 1 && row.pass; ++j) {
      const Tps<FieldElem> partial = hd.theta(full[j], blk - 1 - j);
      for (int i = 0; i <= blk - 1 - j; ++i) {
        rep.telemetry.observe(partial[i]);
        const FieldElem expected =
            binom_mod2(static_cast<uint64_t>(i), static_cast<uint64_t>(j)) ? full[i + j]
                                                                           : FieldElem(f);
        if (partial[i] == expected) continue;
        row.pass = false;
        row.counterexample = {{"kind", "iteration"},
                              {"u", u_text},
                              {"i", i},
                              {"j", j},
                              {"expected", elem_str(expected)},
                              {"actual", elem_str(partial[i])}};
        break;
      }
    }
    row.millis = millis_since(start);
  }

  FieldElem w(f);
  for (int m = 0; m < blk; ++m) w = w + full[m] * t_power(f, m);
  rep.telemetry.observe(w);
  for (int j = 0; j < ell; ++j) {
    CheckResult& row = rep.add(prefix + "/j=" + std::to_string(j));
    const auto start = Clock::now();
    const FieldElem v = hd.theta_coeff(w, 1 << j);
    rep.telemetry.observe(v);
    if (!v.is_zero()) {
      row.pass = false;
      row.counterexample = {
          {"kind", "kernel"}, {"l", ell}, {"j", j}, {"u", u_text}, {"value", elem_str(v)}};
    }
    row.millis = millis_since(start);
  }
  return rep;
}

std::vector<FieldElem> bounded_constant_search(const HigherDerivation& hd, int degree_bound,
                                               int order) {
  const int n = hd.order();
  require(order >= 1 && order <= n, Errc::order_exceeded, "constant search order beyond table");
  const BinaryField f = hd.field();
  const FieldElem t = FieldElem::t(f), x = FieldElem::x(f), z = FieldElem::z(f);

  std::vector<FieldElem> family;
  for (int a = 0; a <= degree_bound; ++a)
    for (int b = 0; a + b <= degree_bound; ++b)
      for (int c = 0; c <= 1 && a + b + c <= degree_bound; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;  // scalar, lies in C
        FieldElem m = x.one();
        for (int i = 0; i < a; ++i) m = m * t;
        for (int i = 0; i < b; ++i) m = m * x;
        if (c) m = m * z;
        family.push_back(std::move(m));
      }

  std::vector<FieldElem> candidates;
  std::set<std::string> seen;
  auto try_candidate = [&](const FieldElem& u) {
    if (u.is_zero()) return;
    const std::string key = elem_str(u);
    if (!seen.insert(key).second) return;
    const Tps<FieldElem> s = hd.theta(u, order);
    for (int i = 1; i <= order; ++i)
      if (!s[i].is_zero()) return;
    candidates.push_back(u);
  };

  for (const FieldElem& u : family) try_candidate(u);
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) try_candidate(family[i] + family[j]);
  return candidates;
}

VerificationReport constants_suite(const HigherDerivation& hd, int degree_bound) {
  VerificationReport rep;
  rep.suite = "constants";
  CheckResult& row = rep.add("constants/bounded-search");
  const auto start = Clock::now();
  const int order = std::min(hd.order(), 8);
  const std::vector<FieldElem> found = bounded_constant_search(hd, degree_bound, order);
  ordered_json names = ordered_json::array();
  for (const FieldElem& u : found) names.push_back(elem_str(u));
  row.details = {{"degree_bound", degree_bound},
                 {"order", order},
                 {"candidates", names},
                 {"note", "bounded heuristic search; absence is evidence, not proof"}};
  row.millis = millis_since(start);
  return rep;
}

VerificationReport kernel_suite(const HigherDerivation& hd, uint64_t seed) {
  VerificationReport rep;
  rep.suite = "kernel";
  const int n = hd.order();
  const BinaryField f = hd.field();

  std::vector<NamedElem> targets = generators(f);
  uint64_t state = seed;
  for (int k = 0; k < 2; ++k) {
    FieldElem u = random_small_elem(f, state);
    targets.push_back({"sample=" + std::to_string(k), std::move(u)});
  }

  bool any = false;
  for (int ell = 1; (1 << ell) + (1 << (ell - 1)) <= n; ++ell) {
    any = true;
    for (const NamedElem& g : targets) {
      const std::string label = g.name.find('=') == std::string::npos ? "u=" + g.name : g.name;
      VerificationReport one = check_kernel_identity(hd, ell, g.value, label);
      for (CheckResult& c : one.checks) rep.checks.push_back(std::move(c));
      rep.telemetry.merge(one.telemetry);
    }
  }
  if (!any) {
    CheckResult& row = rep.add("kernel/skipped");
    row.details = {{"note", "table too short for any l with 2^l + 2^(l-1) <= N"}};
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"iteration", "rho",      "thm51", "kernel",
                                                 "torsion",   "constants", "all"};
  return names;
}

bool is_suite_name(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerificationReport> run_suites(const HigherDerivation& hd,
                                           const std::vector<std::string>& suites, uint64_t seed) {
  std::vector<std::string> selected;
  for (const std::string& s : suites) {
    require(is_suite_name(s), Errc::parse_error, "unknown suite: " + s);
    if (s == "all") {
      for (const std::string& n : suite_names())
        if (n != "all") selected.push_back(n);
    } else {
      selected.push_back(s);
    }
  }
  std::vector<VerificationReport> out;
  for (const std::string& s : selected) {
    if (s == "iteration")
      out.push_back(check_iteration_rule(hd, -1, seed));
    else if (s == "rho")
      out.push_back(check_rho_commutes(hd));
    else if (s == "thm51")
      out.push_back(check_power_conditions(hd));
    else if (s == "kernel")
      out.push_back(kernel_suite(hd, seed));
    else if (s == "torsion")
      out.push_back(torsion_suite(hd));
    else if (s == "constants")
      out.push_back(constants_suite(hd));
  }
  return out;
}

bool replay(const HigherDerivation& hd, const ordered_json& ce) {
  require(ce.is_object() && ce.contains("kind"), Errc::parse_error, "counterexample payload");
  const std::string kind = ce.at("kind").get<std::string>();
  const BinaryField f = hd.field();
  auto elem = [&](const ordered_json& j) { return parse_elem(j.get<std::string>(), f); };

  if (kind == "iteration") {
    const FieldElem u = elem(ce.at("u"));
    const int i = ce.at("i").get<int>(), j = ce.at("j").get<int>();
    const FieldElem actual = hd.theta_compose(u, i, j);
    const FieldElem expected =
        binom_mod2(static_cast<uint64_t>(i), static_cast<uint64_t>(j))
            ? hd.theta_coeff(u, i + j)
            : FieldElem(f);
    return actual != expected;
  }
  if (kind == "rho") {
    const int m = ce.at("m").get<int>();
    const DifferenceSeries ds = compute_f_g(hd, m);
    const bool is_f = ce.at("coefficient").get<std::string>() == "f";
    return !(is_f ? ds.f[m] : ds.g[m]).in_base_rat();
  }
  if (kind == "shift") {
    const FieldElem u = elem(ce.at("u"));
    const int ell = ce.at("l").get<int>(), m = ce.at("m").get<int>();
    return hd.theta_coeff(u, m + (1 << ell)) != hd.theta_compose(u, 1 << ell, m);
  }
  if (kind == "square") {
    const FieldElem u = elem(ce.at("u"));
    const int blk = 1 << ce.at("l").get<int>();
    return !hd.theta_compose(u, blk, blk).is_zero();
  }
  if (kind == "commute") {
    const FieldElem u = elem(ce.at("u"));
    const int blk = 1 << ce.at("l").get<int>(), other = 1 << ce.at("j").get<int>();
    return hd.theta_compose(u, other, blk) != hd.theta_compose(u, blk, other);
  }
  if (kind == "coset") {
    const int blk = 1 << ce.at("l").get<int>();
    const std::span<const FieldElem> xi = hd.xi_table();
    BuildState prefix{f, {xi.begin(), xi.begin() + (blk - 1)}, {}};
    for (int m = 0; m < blk; ++m) prefix.zc.push_back(hd.zcoef(m));
    return !check_choice_coset(prefix, ce.at("l").get<int>(), hd.xi(blk));
  }
  if (kind == "propagation") {
    const int blk = 1 << ce.at("l").get<int>(), m = ce.at("m").get<int>();
    return hd.xi(m + blk) != hd.theta_coeff(hd.xi(m), blk);
  }
  if (kind == "membership") {
    return !hd.xi(ce.at("m").get<int>()).in_square_subring();
  }
  if (kind == "kernel") {
    const FieldElem u = elem(ce.at("u"));
    const int ell = ce.at("l").get<int>(), j = ce.at("j").get<int>();
    const int blk = 1 << ell;
    const Tps<FieldElem> full = hd.theta(u, blk - 1);
    FieldElem w(f);
    for (int m = 0; m < blk; ++m) w = w + full[m] * t_power(f, m);
    return !hd.theta_coeff(w, 1 << j).is_zero();
  }
  fail(Errc::parse_error, "unknown counterexample kind: " + kind);
}

}  // namespace ecid
