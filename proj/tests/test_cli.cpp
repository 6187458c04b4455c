#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ecid/json_io.hpp"
#include "ecid/textio.hpp"
#include "ecid/torsion.hpp"
#include "oracles.hpp"

// End-to-end tests of the installed binary. The unit runner exports the
// binary path through ECID_CLI; without it these cases are skipped.

namespace fs = std::filesystem;

namespace {

std::string cli() {
  const char* p = std::getenv("ECID_CLI");
  return p == nullptr ? std::string() : std::string(p);
}

#define REQUIRE_CLI()                                     \
  do {                                                    \
    if (cli().empty()) {                                  \
      MESSAGE("ECID_CLI not set; skipping CLI coverage"); \
      return;                                             \
    }                                                     \
  } while (0)

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("ecid-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
}

struct Run {
  int code;
  std::string out;
};

// `extra` goes in front of the binary (environment assignments)
Run run_cli(const std::string& args, const std::string& extra = "") {
  static int counter = 0;
  const fs::path capture = work_dir() / ("stdout." + std::to_string(counter++));
  std::string full = extra + (extra.empty() ? "" : " ") + "\"" + cli() + "\" " + args + " > \"" +
                     capture.string() + "\" 2>/dev/null";
  const int status = std::system(full.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(capture)};
}

const ecid::BinaryField F2(1);

fs::path sample_choices() {
  const fs::path p = work_dir() / "choices.json";
  spit(p, "[\"s\", \"0\", \"0\", \"0\", \"0\"]\n");
  return p;
}

fs::path sample_table(int order) {
  const fs::path p = work_dir() / ("table" + std::to_string(order) + ".json");
  Run r = run_cli("construct --order " + std::to_string(order) + " --choices " +
                  sample_choices().string() + " --out " + p.string());
  REQUIRE_EQ(r.code, 0);
  return p;
}

}  // namespace

TEST_CASE("cli: construct without choices emits the trivial table") {
  REQUIRE_CLI();
  Run r = run_cli("construct --order 4");
  REQUIRE_EQ(r.code, 0);
  const auto doc = ecid::ordered_json::parse(r.out);
  CHECK_EQ(doc.at("version").get<int>(), 1);
  CHECK_EQ(doc.at("curve").get<std::string>(), "z^2+z=x^3/F2");
  CHECK_EQ(doc.at("N").get<int>(), 4);
  REQUIRE_EQ(doc.at("xi").size(), 4u);
  for (const auto& e : doc.at("xi")) {
    CHECK_EQ(e.at("a").get<std::string>(), "0");
    CHECK_EQ(e.at("b").get<std::string>(), "0");
  }
  CHECK_EQ(doc.at("choices"), ecid::ordered_json::array({"0", "0", "0"}));
  // file round-trips through the library loader
  const ecid::HigherDerivation hd = ecid::hd_from_text(r.out);
  CHECK_EQ(hd.order(), 4);
  CHECK(hd.xi(3).is_zero());
}

TEST_CASE("cli: construct with block choices reproduces the reference table") {
  REQUIRE_CLI();
  Run r = run_cli("construct --order 8 --choices " + sample_choices().string());
  REQUIRE_EQ(r.code, 0);
  const auto doc = ecid::ordered_json::parse(r.out);
  CHECK_EQ(doc.at("N").get<int>(), 8);
  CHECK_EQ(doc.at("xi")[0].at("a").get<std::string>(), "t^2");
  CHECK_EQ(doc.at("xi")[0].at("b").get<std::string>(), "0");
  CHECK_EQ(doc.at("xi")[1].at("a").get<std::string>(), "t^4*x^2+t^10+t");
  CHECK_EQ(doc.at("xi")[2].at("a").get<std::string>(), "1");
  CHECK_EQ(doc.at("xi")[3].at("a").get<std::string>(), "t^8*x^3+(t^20+t^2)*x^2+t^44+t^8");
  CHECK_EQ(doc.at("xi")[3].at("b").get<std::string>(), "t^8");
  // surplus choice entries beyond the block count are dropped from the log
  CHECK_EQ(doc.at("choices"), ecid::ordered_json::array({"s", "0", "0", "0"}));
  CHECK_EQ(doc.at("zc_digest").get<std::string>(), "dda13044dee09f50");
}

TEST_CASE("cli: construction output is bytewise reproducible") {
  REQUIRE_CLI();
  const fs::path a = work_dir() / "repro_a.json";
  const fs::path b = work_dir() / "repro_b.json";
  REQUIRE_EQ(run_cli("construct --order 6 --choices " + sample_choices().string() + " --out " +
                     a.string())
                 .code,
             0);
  REQUIRE_EQ(run_cli("construct --order 6 --choices " + sample_choices().string() + " --out " +
                     b.string())
                 .code,
             0);
  const std::string ta = slurp(a), tb = slurp(b);
  CHECK_FALSE(ta.empty());
  CHECK_EQ(ta, tb);
  // stdout and --out agree byte for byte
  Run direct = run_cli("construct --order 6 --choices " + sample_choices().string());
  CHECK_EQ(direct.out, ta);
}

TEST_CASE("cli: relative --out paths honor ECID_OUT_DIR") {
  REQUIRE_CLI();
  const fs::path dir = work_dir() / "redirected";
  fs::create_directories(dir);
  Run r = run_cli("construct --order 2 --out rel_table.json",
                  "ECID_OUT_DIR=\"" + dir.string() + "\"");
  REQUIRE_EQ(r.code, 0);
  CHECK(fs::exists(dir / "rel_table.json"));
  // absolute paths remain untouched
  const fs::path abs = work_dir() / "abs_table.json";
  Run r2 = run_cli("construct --order 2 --out " + abs.string(),
                   "ECID_OUT_DIR=\"" + dir.string() + "\"");
  REQUIRE_EQ(r2.code, 0);
  CHECK(fs::exists(abs));
  CHECK_FALSE(fs::exists(dir / abs.filename()));
}

TEST_CASE("cli: verify passes a constructed table on every suite") {
  REQUIRE_CLI();
  const fs::path table = sample_table(8);
  Run all = run_cli("verify --in " + table.string());
  CHECK_EQ(all.code, 0);
  CHECK(all.out.find("suite iteration: PASS") != std::string::npos);
  CHECK(all.out.find("suite thm51: PASS") != std::string::npos);
  CHECK(all.out.find("suite torsion: PASS") != std::string::npos);
  CHECK(all.out.find("FAIL") == std::string::npos);

  Run json = run_cli("verify --in " + table.string() + " --suite iteration,rho --format json");
  CHECK_EQ(json.code, 0);
  const auto doc = ecid::ordered_json::parse(json.out);
  REQUIRE(doc.is_array());
  REQUIRE_EQ(doc.size(), 2u);
  CHECK_EQ(doc[0].at("suite").get<std::string>(), "iteration");
  CHECK_EQ(doc[1].at("suite").get<std::string>(), "rho");
  for (const auto& row : doc[0].at("checks"))
    CHECK_EQ(row.at("status").get<std::string>(), "pass");
  CHECK(doc[0].at("telemetry").contains("max_num_degree"));

  // seeds select different spot samples without changing the verdict
  CHECK_EQ(run_cli("verify --in " + table.string() + " --suite iteration --seed 7").code, 0);
}

TEST_CASE("cli: verify reports suite failures with exit 1") {
  REQUIRE_CLI();
  // a well-formed file whose table satisfies nothing: digest is consistent,
  // so the failure is a verification verdict, not an input error
  const ecid::HigherDerivation bad = ecid::HigherDerivation::make(
      F2, 2, {oracle::E(F2, "t"), ecid::FieldElem::zero_of(F2)}, {}, false);
  const fs::path p = work_dir() / "bad_table.json";
  spit(p, ecid::hd_to_text(bad));
  Run r = run_cli("verify --in " + p.string() + " --suite iteration");
  CHECK_EQ(r.code, 1);
  CHECK(r.out.find("suite iteration: FAIL") != std::string::npos);
  CHECK(r.out.find("counterexample") != std::string::npos);
  // the passing suites alone still exit 0 on the same file
  CHECK_EQ(run_cli("verify --in " + p.string() + " --suite constants").code, 0);
}

TEST_CASE("cli: a stored digest that contradicts the table is exit 3") {
  REQUIRE_CLI();
  auto doc = ecid::ordered_json::parse(slurp(sample_table(4)));
  doc["zc_digest"] = "0000000000000000";
  const fs::path p = work_dir() / "digest_edited.json";
  spit(p, doc.dump(2) + "\n");
  Run r = run_cli("verify --in " + p.string());
  CHECK_EQ(r.code, 3);
}

TEST_CASE("cli: malformed inputs are exit 2") {
  REQUIRE_CLI();
  const fs::path table = sample_table(4);

  const fs::path corrupt = work_dir() / "corrupt.json";
  spit(corrupt, "{ not json");
  CHECK_EQ(run_cli("verify --in " + corrupt.string()).code, 2);

  const fs::path incomplete = work_dir() / "incomplete.json";
  spit(incomplete, "{\"version\": 1}");
  CHECK_EQ(run_cli("verify --in " + incomplete.string()).code, 2);

  CHECK_EQ(run_cli("verify --in " + (work_dir() / "no_such_file.json").string()).code, 2);
  CHECK_EQ(run_cli("verify --in " + table.string() + " --suite bogus").code, 2);
  CHECK_EQ(run_cli("verify --in " + table.string() + " --format yaml").code, 2);

  const fs::path bad_choices = work_dir() / "bad_choices.json";
  spit(bad_choices, "{\"not\": \"an array\"}");
  CHECK_EQ(run_cli("construct --order 2 --choices " + bad_choices.string()).code, 2);
  spit(bad_choices, "[\"2*t\"]");
  CHECK_EQ(run_cli("construct --order 2 --choices " + bad_choices.string()).code, 2);

  CHECK_EQ(run_cli("construct --order 0").code, 2);
  CHECK_EQ(run_cli("construct").code, 2);
  CHECK_EQ(run_cli("nonsense").code, 2);
  CHECK_EQ(run_cli("").code, 2);
  CHECK_EQ(run_cli("point --op frobnicate --p \"(0,0)\" --gf 2^2").code, 2);
  CHECK_EQ(run_cli("point --op add --p \"(0,0)\" --q \"(0,1)\" --gf 3^2").code, 2);
  CHECK_EQ(run_cli("point --op add --p \"(0,0)\" --q \"(0,1)\" --gf 2^9").code, 2);
  CHECK_EQ(run_cli("point --op add --p \"(0,0)\" --gf 2^2").code, 2);  // --q missing
  CHECK_EQ(run_cli("point --op mul --p \"(0,1)\" --law standard --gf 2^2").code, 2);
  CHECK_EQ(run_cli("bench --orders 0").code, 2);
  CHECK_EQ(run_cli("bench --orders 2,x").code, 2);
  // help is not an error
  CHECK_EQ(run_cli("--help").code, 0);
}

TEST_CASE("cli: point arithmetic matches the in-process group law") {
  REQUIRE_CLI();
  const ecid::BinaryField gf4(2);
  auto P = [&](uint16_t x, uint16_t z) {
    return ecid::ProjPoint<ecid::GfElem>::at(
        ecid::AffinePoint<ecid::GfElem>::checked({x, gf4}, {z, gf4}));
  };

  Run add = run_cli("point --gf 2^2 --op add --p \"(w,w)\" --q \"(w+1,w)\"");
  CHECK_EQ(add.code, 0);
  CHECK_EQ(add.out, ecid::point_str(ecid::translated_add(P(2, 2), P(3, 2))) + "\n");

  Run sub = run_cli("point --gf 2^2 --op sub --p \"(w,w)\" --q \"(1,w)\"");
  CHECK_EQ(sub.code, 0);
  CHECK_EQ(sub.out, ecid::point_str(ecid::translated_sub(P(2, 2), P(1, 2))) + "\n");

  // the translated difference may land at infinity, which only the complete
  // law can express
  CHECK_EQ(run_cli("point --gf 2^2 --op sub --p \"(w,w)\" --q \"(w+1,w)\"").out, "infinity\n");

  // the chord construction returns the same difference
  Run chord = run_cli("point --gf 2^2 --op sub --p \"(w,w)\" --q \"(1,w)\" --law chord");
  CHECK_EQ(chord.code, 0);
  CHECK_EQ(chord.out, sub.out);
  CHECK_EQ(run_cli("point --gf 2^2 --op sub --p \"(w,w)\" --q \"(w,w)\" --law chord").out,
           "(0,0)\n");

  CHECK_EQ(run_cli("point --gf 2^2 --op mul --p \"(w,w)\" --n 3").out, "(0,0)\n");
  CHECK_EQ(run_cli("point --gf 2^2 --op mul --p \"(w,w)\" --n 0").out, "(0,0)\n");
  CHECK_EQ(run_cli("point --gf 2^3 --op mul --p \"(0,1)\" --n 3").out, "(0,0)\n");
  CHECK_EQ(run_cli("point --gf 2^2 --op neg --law standard --p \"(0,0)\"").out, "(0,1)\n");
  CHECK_EQ(run_cli("point --gf 2^2 --op neg --p \"infinity\"").out,
           ecid::point_str(ecid::translated_neg(
               ecid::ProjPoint<ecid::GfElem>::infinity(ecid::GfElem::zero_of(gf4)))) +
               "\n");
  // conjugate points sum to infinity under the standard law
  CHECK_EQ(run_cli("point --gf 2^2 --op add --law standard --p \"(0,0)\" --q \"(0,1)\"").out,
           "infinity\n");
}

TEST_CASE("cli: point inputs are validated") {
  REQUIRE_CLI();
  CHECK_EQ(run_cli("point --gf 2^2 --op add --p \"(1,1)\" --q \"(0,0)\"").code, 2);  // off curve
  CHECK_EQ(run_cli("point --gf 2^2 --op add --p \"w,w\" --q \"(0,0)\"").code, 2);
  CHECK_EQ(run_cli("point --gf 2^2 --op add --p \"(y,0)\" --q \"(0,0)\"").code, 2);
  // inverse through 1+z = 0 has no affine chord
  CHECK_EQ(run_cli("point --gf 2^2 --op sub --p \"(0,1)\" --q \"(w,w)\" --law chord").code, 2);
  // infinity is fine for the group laws but not for the chord formula
  CHECK_EQ(run_cli("point --gf 2^2 --op sub --p \"infinity\" --q \"(w,w)\"").code, 0);
  CHECK_EQ(run_cli("point --gf 2^2 --op sub --p \"infinity\" --q \"(w,w)\" --law chord").code, 2);
}

TEST_CASE("cli: bench emits one telemetry row per order") {
  REQUIRE_CLI();
  auto rows = [](const std::string& csv) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      out.push_back(std::move(cells));
    }
    return out;
  };

  Run r1 = run_cli("bench --orders 2,4,8");
  REQUIRE_EQ(r1.code, 0);
  const auto t1 = rows(r1.out);
  REQUIRE_EQ(t1.size(), 4u);
  CHECK_EQ(t1[0], std::vector<std::string>{"order", "millis", "max_t_deg", "max_x_deg", "coeffs"});
  CHECK_EQ(t1[1][0], "2");
  CHECK_EQ(t1[2][0], "4");
  CHECK_EQ(t1[3][0], "8");

  // degree telemetry is a function of the table, not of the wall clock
  Run r2 = run_cli("bench --orders 2,4,8");
  REQUIRE_EQ(r2.code, 0);
  const auto t2 = rows(r2.out);
  REQUIRE_EQ(t2.size(), 4u);
  for (size_t i = 1; i < 4; ++i)
    for (size_t c : {0u, 2u, 3u, 4u}) CHECK_EQ(t1[i][c], t2[i][c]);
  // growing order cannot shrink the maximal degrees
  for (size_t c : {2u, 3u, 4u}) {
    CHECK_LE(std::stoul(t1[1][c]), std::stoul(t1[2][c]));
    CHECK_LE(std::stoul(t1[2][c]), std::stoul(t1[3][c]));
  }
}

TEST_CASE("cli: verify --out writes the same report it prints") {
  REQUIRE_CLI();
  const fs::path table = sample_table(4);
  const fs::path report = work_dir() / "report.json";
  Run filed = run_cli("verify --in " + table.string() + " --suite rho --format json --out " +
                      report.string());
  REQUIRE_EQ(filed.code, 0);
  Run direct = run_cli("verify --in " + table.string() + " --suite rho --format json");
  REQUIRE_EQ(direct.code, 0);
  CHECK_EQ(slurp(report), direct.out);
}
