#pragma once

#include <stdexcept>
#include <string>

namespace ecid {

enum class Errc {
  division_by_zero,
  non_unit_constant_term,
  order_mismatch,
  order_exceeded,
  off_curve,
  non_invertible_denominator,
  not_in_subfield,
  choice_not_in_subfield,
  membership_violation,
  insufficient_data,
  field_mismatch,
  parse_error,
  digest_mismatch,
  internal_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::non_unit_constant_term: return "non_unit_constant_term";
    case Errc::order_mismatch: return "order_mismatch";
    case Errc::order_exceeded: return "order_exceeded";
    case Errc::off_curve: return "off_curve";
    case Errc::non_invertible_denominator: return "non_invertible_denominator";
    case Errc::not_in_subfield: return "not_in_subfield";
    case Errc::choice_not_in_subfield: return "choice_not_in_subfield";
    case Errc::membership_violation: return "membership_violation";
    case Errc::insufficient_data: return "insufficient_data";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::parse_error: return "parse_error";
    case Errc::digest_mismatch: return "digest_mismatch";
    case Errc::internal_error: return "internal_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const char* msg) {
  if (!ok) fail(c, msg);
}

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace ecid
