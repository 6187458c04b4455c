#include "ecid/textio.hpp"

#include <cctype>
#include <cstdio>

namespace ecid {

namespace {

bool needs_wrap(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('/') != std::string::npos;
}

std::string wrapped(const std::string& s) {
  return needs_wrap(s) ? "(" + s + ")" : s;
}

std::string power_str(char var, size_t e) {
  if (e == 0) return "1";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

std::string term_str(const std::string& coeff, char var, size_t e) {
  if (e == 0) return coeff;
  if (coeff == "1") return power_str(var, e);
  return wrapped(coeff) + "*" + power_str(var, e);
}

}  // namespace

std::string gf_str(const GfElem& c) {
  if (c.code == 0) return "0";
  std::string s;
  for (int i = 15; i >= 0; --i) {
    if (!((c.code >> i) & 1)) continue;
    if (!s.empty()) s += "+";
    s += power_str('w', static_cast<size_t>(i));
  }
  return s;
}

std::string poly_str(const FpPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const uint16_t c = p.coeff(static_cast<size_t>(i));
    if (!c) continue;
    if (!s.empty()) s += "+";
    s += term_str(gf_str(GfElem(c, p.field())), var, static_cast<size_t>(i));
  }
  return s;
}

std::string rat_str(const Rat& r, char var) {
  if (r.is_polynomial()) return poly_str(r.num(), var);
  return "(" + poly_str(r.num(), var) + ")/(" + poly_str(r.den(), var) + ")";
}

namespace {

std::string xpoly_str(const std::vector<Rat>& cs) {
  std::string s;
  for (size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    s += term_str(rat_str(cs[i]), 'x', i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string xrat_str(const XRat& u) {
  XRat::TowerForm tf = u.tower_form();
  const bool den_trivial = tf.den_c.size() == 1 && tf.den_c[0].is_one();
  if (den_trivial) return xpoly_str(tf.num_c);
  return "(" + xpoly_str(tf.num_c) + ")/(" + xpoly_str(tf.den_c) + ")";
}

std::string elem_str(const FieldElem& u) {
  if (u.b().is_zero()) return xrat_str(u.a());
  std::string zpart = term_str(xrat_str(u.b()), 'z', 1);
  if (u.a().is_zero()) return zpart;
  return xrat_str(u.a()) + "+" + zpart;
}

namespace {

// recursive-descent evaluator straight into L
class Parser {
 public:
  Parser(std::string_view text, BinaryField f, std::string_view vars)
      : s_(text), fld_(f), vars_(vars) {}

  FieldElem run() {
    FieldElem v = expr();
    skip_ws();
    require(pos_ == s_.size(), Errc::parse_error, "trailing input after expression");
    return v;
  }

 private:
  std::string_view s_;
  BinaryField fld_;
  std::string_view vars_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  uint64_t integer() {
    skip_ws();
    require(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])),
            Errc::parse_error, "expected integer");
    uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
      require(v <= (uint64_t(1) << 32), Errc::parse_error, "integer too large");
      ++pos_;
    }
    return v;
  }

  FieldElem expr() {
    FieldElem v = term();
    while (eat('+')) v = v + term();
    return v;
  }

  FieldElem term() {
    FieldElem v = factor();
    while (true) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  FieldElem factor() {
    FieldElem v = primary();
    if (eat('^')) {
      uint64_t e = integer();
      FieldElem r = FieldElem::one_of(fld_);
      FieldElem base = v;
      while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
      }
      return r;
    }
    return v;
  }

  FieldElem primary() {
    skip_ws();
    require(pos_ < s_.size(), Errc::parse_error, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElem v = expr();
      require(eat(')'), Errc::parse_error, "missing closing parenthesis");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = integer();
      require(v <= 1, Errc::parse_error, "coefficient literals must be 0 or 1");
      return v ? FieldElem::one_of(fld_) : FieldElem::zero_of(fld_);
    }
    if (c == 'w') {
      ++pos_;
      require(fld_.degree() >= 2, Errc::parse_error, "generator w needs GF(2^m) with m >= 2");
      return FieldElem::from_scalar(GfElem(2, fld_));
    }
    require(vars_.find(c) != std::string_view::npos, Errc::parse_error,
            "unknown symbol in expression");
    ++pos_;
    switch (c) {
      case 't':
      case 's':
        return FieldElem::t(fld_);
      case 'x':
        return FieldElem::x(fld_);
      case 'z':
        return FieldElem::z(fld_);
      default:
        fail(Errc::parse_error, "unknown variable");
    }
  }
};

}  // namespace

FieldElem parse_elem(std::string_view text, BinaryField f, std::string_view vars) {
  return Parser(text, f, vars).run();
}

XRat parse_xrat(std::string_view text, BinaryField f) {
  FieldElem e = parse_elem(text, f, "tx");
  require(e.b().is_zero(), Errc::parse_error, "z not allowed here");
  return e.a();
}

Rat parse_rat(std::string_view text, BinaryField f, char var) {
  FieldElem e = parse_elem(text, f, std::string_view(&var, 1));
  require(e.in_base_rat(), Errc::parse_error, "expected a univariate rational function");
  return e.to_base_rat();
}

GfElem parse_gf(std::string_view text, BinaryField f) {
  FieldElem e = parse_elem(text, f, "");
  require(e.b().is_zero() && e.a().is_t_only(), Errc::parse_error, "expected a field scalar");
  Rat r = e.a().to_rat();
  require(r.is_polynomial() && r.num().degree() <= 0, Errc::parse_error,
          "expected a field scalar");
  return GfElem(r.num().coeff(0), f);
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

}  // namespace ecid
