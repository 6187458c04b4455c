#pragma once

#include <string>
#include <vector>

#include "ecid/verifier.hpp"

namespace ecid {

// Table file schema (schema_version 1):
//   {"version": 1, "curve": "z^2+z=x^3/F2", "N": <order>,
//    "xi": [{"a": "<fraction>", "b": "<fraction>"}, ...],
//    "choices": ["<fraction in s>", ...],
//    "zc_digest": "<hex>"}
// The z-table is never stored; it is re-derived on load and its canonical
// text must hash to zc_digest.
inline constexpr int kHdSchemaVersion = 1;
inline constexpr const char* kCurveTag = "z^2+z=x^3/F2";

std::string zc_digest(const HigherDerivation& hd);
ordered_json hd_to_json(const HigherDerivation& hd);
std::string hd_to_text(const HigherDerivation& hd);
HigherDerivation hd_from_json(const ordered_json& doc);
HigherDerivation hd_from_text(const std::string& text);

ordered_json report_to_json(const VerificationReport& rep);
ordered_json reports_to_json(const std::vector<VerificationReport>& reps);
std::string report_text(const VerificationReport& rep);
std::string reports_text(const std::vector<VerificationReport>& reps);

std::string load_text_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

}  // namespace ecid
