#include "ecid/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ecid/textio.hpp"

namespace ecid {

std::string zc_digest(const HigherDerivation& hd) {
  std::string joined;
  for (int m = 0; m <= hd.order(); ++m) {
    if (m > 0) joined += '|';
    joined += elem_str(hd.zcoef(m));
  }
  return fnv1a64_hex(joined);
}

ordered_json hd_to_json(const HigherDerivation& hd) {
  require(hd.field().degree() == 1, Errc::field_mismatch,
          "table files carry F2 constants; extensions are derived in memory");
  ordered_json xi = ordered_json::array();
  for (int m = 1; m <= hd.order(); ++m)
    xi.push_back({{"a", xrat_str(hd.xi(m).a())}, {"b", xrat_str(hd.xi(m).b())}});
  return {{"version", kHdSchemaVersion}, {"curve", kCurveTag},   {"N", hd.order()},
          {"xi", std::move(xi)},         {"choices", hd.choices()}, {"zc_digest", zc_digest(hd)}};
}

std::string hd_to_text(const HigherDerivation& hd) { return hd_to_json(hd).dump(2) + "\n"; }

HigherDerivation hd_from_json(const ordered_json& doc) {
  require(doc.is_object(), Errc::parse_error, "table file must hold a JSON object");
  for (const char* key : {"version", "curve", "N", "xi", "choices", "zc_digest"})
    require(doc.contains(key), Errc::parse_error, std::string("table file missing key: ") + key);
  require(doc.at("version").get<int>() == kHdSchemaVersion, Errc::parse_error,
          "unsupported table schema version");
  require(doc.at("curve").get<std::string>() == kCurveTag, Errc::parse_error,
          "table file written for a different curve");
  const int n = doc.at("N").get<int>();
  require(n >= 1, Errc::parse_error, "table order must be at least 1");
  const auto& xi_json = doc.at("xi");
  require(xi_json.is_array() && static_cast<int>(xi_json.size()) == n, Errc::parse_error,
          "xi array length must equal N");

  const BinaryField f = BinaryField::gf2();
  std::vector<FieldElem> xi;
  xi.reserve(static_cast<size_t>(n));
  for (const auto& e : xi_json) {
    require(e.is_object() && e.contains("a") && e.contains("b"), Errc::parse_error,
            "xi entries must be {\"a\", \"b\"} objects");
    xi.emplace_back(parse_xrat(e.at("a").get<std::string>(), f),
                    parse_xrat(e.at("b").get<std::string>(), f));
  }
  std::vector<std::string> choices = doc.at("choices").get<std::vector<std::string>>();
  HigherDerivation hd = HigherDerivation::make(f, n, std::move(xi), std::move(choices), false);
  require(zc_digest(hd) == doc.at("zc_digest").get<std::string>(), Errc::digest_mismatch,
          "derived z-table does not match the stored digest");
  return hd;
}

HigherDerivation hd_from_text(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  require(!doc.is_discarded(), Errc::parse_error, "table file is not valid JSON");
  return hd_from_json(doc);
}

ordered_json report_to_json(const VerificationReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : rep.checks) {
    ordered_json row = {{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.counterexample.is_null()) row["counterexample"] = c.counterexample;
    if (!c.details.is_null()) row["details"] = c.details;
    row["millis"] = c.millis;
    checks.push_back(std::move(row));
  }
  return {{"suite", rep.suite},
          {"checks", std::move(checks)},
          {"telemetry",
           {{"max_num_degree", rep.telemetry.max_num_degree},
            {"max_den_degree", rep.telemetry.max_den_degree}}}};
}

ordered_json reports_to_json(const std::vector<VerificationReport>& reps) {
  ordered_json arr = ordered_json::array();
  for (const VerificationReport& r : reps) arr.push_back(report_to_json(r));
  return arr;
}

std::string report_text(const VerificationReport& rep) {
  std::ostringstream out;
  size_t passed = 0;
  for (const CheckResult& c : rep.checks) passed += c.pass ? 1 : 0;
  out << "suite " << rep.suite << ": " << (passed == rep.checks.size() ? "PASS" : "FAIL") << " ("
      << passed << "/" << rep.checks.size() << " checks)\n";
  for (const CheckResult& c : rep.checks) {
    if (c.pass && c.details.is_null()) continue;
    out << "  " << (c.pass ? "pass" : "FAIL") << " " << c.id;
    if (!c.counterexample.is_null()) out << "  counterexample " << c.counterexample.dump();
    if (!c.details.is_null()) out << "  details " << c.details.dump();
    out << "\n";
  }
  out << "  telemetry: max_num_degree=" << rep.telemetry.max_num_degree
      << " max_den_degree=" << rep.telemetry.max_den_degree << "\n";
  return out.str();
}

std::string reports_text(const std::vector<VerificationReport>& reps) {
  std::string out;
  for (const VerificationReport& r : reps) out += report_text(r);
  return out;
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::parse_error, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), Errc::parse_error, "cannot open file for writing: " + path);
  out << content;
  require(out.good(), Errc::internal_error, "short write: " + path);
}

}  // namespace ecid
