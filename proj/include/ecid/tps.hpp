#pragma once

#include <vector>

#include "ecid/errors.hpp"

namespace ecid {

// Truncated power series sum_{i=0..order} c_i T^i over a commutative char-2
// coefficient ring K. Operations require equal orders and truncate products
// back to the common order. K supplies zero(), one(), is_zero(), inv(),
// +, *, ==; sqr() is used when available.
template <class K>
class Tps {
 public:
  Tps(int order, const K& c0) : c_(static_cast<size_t>(order) + 1, c0.zero()) {
    require(order >= 0, Errc::internal_error, "negative series order");
    c_[0] = c0;
  }

  static Tps zeros(int order, const K& proto) { return Tps(order, proto.zero()); }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const K& coeff(int i) const {
    require(i >= 0 && i <= order(), Errc::order_exceeded, "series coefficient out of range");
    return c_[static_cast<size_t>(i)];
  }
  const K& operator[](int i) const { return coeff(i); }

  void set_coeff(int i, K v) {
    require(i >= 0 && i <= order(), Errc::order_exceeded, "series coefficient out of range");
    c_[static_cast<size_t>(i)] = std::move(v);
  }

  bool is_zero() const {
    for (const K& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Tps zero() const { return zeros(order(), c_[0]); }
  Tps one() const { return Tps(order(), c_[0].one()); }

  Tps truncated(int new_order) const {
    require(new_order >= 0 && new_order <= order(), Errc::order_exceeded, "truncation order");
    Tps r = zeros(new_order, c_[0]);
    for (int i = 0; i <= new_order; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return r;
  }

  friend Tps operator+(const Tps& a, const Tps& b) {
    require(a.order() == b.order(), Errc::order_mismatch, "series add");
    Tps r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Tps operator-(const Tps& a, const Tps& b) { return a + b; }

  friend Tps operator*(const Tps& a, const Tps& b) {
    require(a.order() == b.order(), Errc::order_mismatch, "series mul");
    Tps r = a.zero();
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; i + j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  // char-2 square: only even slots receive c_i^2
  Tps sqr() const {
    Tps r = zero();
    for (size_t i = 0; 2 * i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if constexpr (requires(const K& k) { k.sqr(); })
        r.c_[2 * i] = c_[i].sqr();
      else
        r.c_[2 * i] = c_[i] * c_[i];
    }
    return r;
  }

  Tps inv() const {
    K b0(c_[0]);
    try {
      b0 = c_[0].inv();
    } catch (const Error&) {
      fail(Errc::non_unit_constant_term, "series inverse needs invertible constant term");
    }
    Tps r = zero();
    r.c_[0] = b0;
    for (size_t m = 1; m < c_.size(); ++m) {
      K acc = c_[0].zero();
      for (size_t k = 1; k <= m; ++k) {
        if (c_[k].is_zero() || r.c_[m - k].is_zero()) continue;
        acc = acc + c_[k] * r.c_[m - k];
      }
      r.c_[m] = b0 * acc;
    }
    return r;
  }

  friend bool operator==(const Tps&, const Tps&) = default;

 private:
  std::vector<K> c_;
};

}  // namespace ecid
