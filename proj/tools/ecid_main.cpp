#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecid/json_io.hpp"
#include "ecid/textio.hpp"
#include "ecid/torsion.hpp"

namespace {

using namespace ecid;

// relative output paths land under ECID_OUT_DIR when it is set
std::string out_path(const std::string& p) {
  const char* dir = std::getenv("ECID_OUT_DIR");
  if (dir == nullptr || p.empty() || p.front() == '/') return p;
  std::string d(dir);
  if (!d.empty() && d.back() != '/') d += '/';
  return d + p;
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty())
    std::cout << content;
  else
    save_text_file(out_path(out), content);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    const size_t end = comma == std::string::npos ? s.size() : comma;
    if (end > pos) parts.push_back(s.substr(pos, end - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

ChoiceList load_choices(const std::string& path, BinaryField f) {
  if (path.empty()) return ChoiceList{};
  ordered_json doc = ordered_json::parse(load_text_file(path), nullptr, false);
  require(!doc.is_discarded() && doc.is_array(), Errc::parse_error,
          "choices file must be a JSON array of fraction strings");
  std::vector<std::string> texts;
  for (const auto& e : doc) {
    require(e.is_string(), Errc::parse_error, "choices entries must be strings");
    texts.push_back(e.get<std::string>());
  }
  return ChoiceList::parse(f, texts);
}

BinaryField parse_gf_flag(const std::string& s) {
  require(s.size() >= 3 && s[0] == '2' && s[1] == '^', Errc::parse_error,
          "--gf expects the form 2^m");
  int m = 0;
  for (size_t i = 2; i < s.size(); ++i) {
    require(s[i] >= '0' && s[i] <= '9', Errc::parse_error, "--gf expects the form 2^m");
    m = m * 10 + (s[i] - '0');
  }
  require(m >= 1 && m <= 8, Errc::parse_error, "--gf supports 2^1 through 2^8");
  return BinaryField(static_cast<unsigned>(m));
}

ProjPoint<GfElem> parse_point(const std::string& s, BinaryField f) {
  if (s == "infinity") return ProjPoint<GfElem>::infinity(GfElem::zero_of(f));
  require(s.size() >= 2 && s.front() == '(' && s.back() == ')', Errc::parse_error,
          "point format is (x,z) or infinity");
  const std::string body = s.substr(1, s.size() - 2);
  int depth = 0;
  size_t comma = std::string::npos;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ',' && depth == 0) {
      comma = i;
      break;
    }
  }
  require(comma != std::string::npos, Errc::parse_error, "point format is (x,z) or infinity");
  const GfElem x = parse_gf(body.substr(0, comma), f);
  const GfElem z = parse_gf(body.substr(comma + 1), f);
  require(on_curve(x, z), Errc::off_curve, "point is not on z^2 + z = x^3");
  return ProjPoint<GfElem>::at({x, z});
}

int cmd_construct(int order, const std::string& choices_path, const std::string& out) {
  const BinaryField f = BinaryField::gf2();
  const ChoiceList cl = load_choices(choices_path, f);
  const HigherDerivation hd = construct(f, order, cl);
  emit(out, hd_to_text(hd));
  return 0;
}

int cmd_verify(const std::string& in, const std::string& suite_arg, const std::string& format,
               uint64_t seed, const std::string& out) {
  const HigherDerivation hd = hd_from_text(load_text_file(in));
  const std::vector<std::string> suites = split_csv(suite_arg);
  require(!suites.empty(), Errc::parse_error, "--suite must name at least one suite");
  const std::vector<VerificationReport> reps = run_suites(hd, suites, seed);
  emit(out, format == "json" ? reports_to_json(reps).dump(2) + "\n" : reports_text(reps));
  for (const VerificationReport& r : reps)
    if (!r.all_pass()) return 1;
  return 0;
}

int cmd_point(const std::string& gf, const std::string& op, const std::string& p_text,
              const std::string& q_text, uint64_t n, const std::string& law,
              const std::string& out) {
  const BinaryField f = parse_gf_flag(gf);
  const ProjPoint<GfElem> p = parse_point(p_text, f);
  ProjPoint<GfElem> r = p;
  if (op == "add" || op == "sub") {
    require(!q_text.empty(), Errc::parse_error, "--q is required for add/sub");
    const ProjPoint<GfElem> q = parse_point(q_text, f);
    if (law == "standard") {
      r = op == "add" ? std_add(p, q) : std_add(p, std_neg(q));
    } else if (op == "add") {
      r = translated_add(p, q);
    } else if (law == "chord") {
      require(!p.is_infinity() && !q.is_infinity(), Errc::parse_error,
              "the chord difference formula needs affine points");
      r = ProjPoint<GfElem>::at(affine_sub(p.affine(), q.affine()));
    } else {
      r = translated_sub(p, q);
    }
  } else if (op == "neg") {
    r = law == "standard" ? std_neg(p) : translated_neg(p);
  } else if (op == "mul") {
    require(law != "standard", Errc::parse_error, "--op mul runs under the translated law");
    r = mul_n(p, n);
  } else {
    fail(Errc::parse_error, "--op must be one of add, sub, neg, mul");
  }
  emit(out, point_str(r) + "\n");
  return 0;
}

int cmd_bench(const std::string& orders_arg, const std::string& choices_path,
              const std::string& out) {
  const BinaryField f = BinaryField::gf2();
  std::vector<int> orders;
  for (const std::string& s : split_csv(orders_arg)) {
    int n = 0;
    for (char c : s) {
      require(c >= '0' && c <= '9', Errc::parse_error, "--orders expects integers");
      n = n * 10 + (c - '0');
    }
    require(n >= 1, Errc::parse_error, "bench orders must be at least 1");
    orders.push_back(n);
  }
  require(!orders.empty(), Errc::parse_error, "--orders expects a comma-separated list");

  ChoiceList cl;
  if (choices_path.empty())
    cl = ChoiceList::parse(f, std::vector<std::string>{"s"});
  else
    cl = load_choices(choices_path, f);

  std::string csv = "order,millis,max_t_deg,max_x_deg,coeffs\n";
  for (int n : orders) {
    const auto start = std::chrono::steady_clock::now();
    const HigherDerivation hd = construct(f, n, cl);
    check_iteration_rule(hd);
    check_rho_commutes(hd);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    size_t tdeg = 0, xdeg = 0, coeffs = 0;
    for (int m = 1; m <= n; ++m) {
      tdeg = std::max(tdeg, hd.xi(m).max_tdeg());
      xdeg = std::max(xdeg, hd.xi(m).max_xdeg());
      coeffs += hd.xi(m).coeff_count();
    }
    csv += std::to_string(n) + "," + std::to_string(ms) + "," + std::to_string(tdeg) + "," +
           std::to_string(xdeg) + "," + std::to_string(coeffs) + "\n";
  }
  emit(out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of iterative derivations on the function "
               "field of z^2 + z = x^3 over F2"};
  app.require_subcommand(1);

  int order = 1;
  std::string choices_path, out, in;
  std::string suite_arg = "all", format = "text";
  uint64_t seed = ecid::kDefaultSeed;

  CLI::App* c = app.add_subcommand("construct", "build a derivation table by block recursion");
  c->add_option("--order,-n", order, "table order N")->required()->check(CLI::PositiveNumber);
  c->add_option("--choices", choices_path, "JSON array of block choices (fractions in s)");
  c->add_option("--out", out, "output file (stdout when omitted)");

  CLI::App* v = app.add_subcommand("verify", "run verification suites on a table file");
  v->add_option("--in", in, "table file")->required();
  v->add_option("--suite", suite_arg,
                "comma list from: iteration, rho, thm51, kernel, torsion, constants, all");
  v->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  v->add_option("--seed", seed, "seed for sampled checks");
  v->add_option("--out", out, "output file (stdout when omitted)");

  std::string gf = "2^2", op_name, p_text, q_text, law = "translated";
  uint64_t n_times = 1;
  CLI::App* pt = app.add_subcommand("point", "finite-field point arithmetic on the curve");
  pt->add_option("--gf", gf, "coefficient field, e.g. 2^3");
  pt->add_option("--op", op_name, "add | sub | neg | mul")->required();
  pt->add_option("--p", p_text, "first point, (x,z) or infinity")->required();
  pt->add_option("--q", q_text, "second point for add/sub");
  pt->add_option("--n", n_times, "multiplier for --op mul");
  pt->add_option("--law", law, "translated (neutral (0,0)), standard (neutral at infinity), or "
                               "chord (the affine difference formula)")
      ->check(CLI::IsMember({"translated", "standard", "chord"}));
  pt->add_option("--out", out, "output file (stdout when omitted)");

  std::string orders_arg;
  CLI::App* b = app.add_subcommand("bench", "construct + verify timing and degree telemetry");
  b->add_option("--orders", orders_arg, "comma list of table orders")->required();
  b->add_option("--choices", choices_path, "choices file (defaults to [\"s\"])");
  b->add_option("--out", out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c)) return cmd_construct(order, choices_path, out);
    if (app.got_subcommand(v)) return cmd_verify(in, suite_arg, format, seed, out);
    if (app.got_subcommand(pt)) return cmd_point(gf, op_name, p_text, q_text, n_times, law, out);
    if (app.got_subcommand(b)) return cmd_bench(orders_arg, choices_path, out);
  } catch (const ecid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ecid::Errc::digest_mismatch ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
