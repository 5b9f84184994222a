#pragma once

#include "shiftarg/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace shiftarg {

/* Dense polynomial in one formal variable with coefficients in a ring R
 * (possibly noncommutative; the variable is central).  R must provide
 * operator+, operator-, operator*(R), operator*(Rational), operator== and
 * is_zero().  A zero prototype carries any ring context (such as n). */
template <class R>
class RingPoly {
public:
  explicit RingPoly(R zero) : zero_(std::move(zero)) {}

  static RingPoly from_coeffs(R zero, std::vector<R> coeffs) {
    RingPoly p(std::move(zero));
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  const R& zero() const { return zero_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial

  const R& at(int d) const {
    if (d < 0 || d >= int(c_.size())) return zero_;
    return c_[d];
  }

  void set(int d, R value) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d >= int(c_.size())) c_.resize(size_t(d) + 1, zero_);
    c_[d] = std::move(value);
    trim();
  }

  bool is_zero() const { return c_.empty(); }

  RingPoly operator+(const RingPoly& o) const {
    RingPoly r(zero_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = at(int(i)) + o.at(int(i));
    r.trim();
    return r;
  }

  RingPoly operator-(const RingPoly& o) const {
    RingPoly r(zero_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = at(int(i)) - o.at(int(i));
    r.trim();
    return r;
  }

  RingPoly operator*(const RingPoly& o) const {
    RingPoly r(zero_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
      }
    }
    r.trim();
    return r;
  }

  RingPoly operator*(const Rational& s) const {
    RingPoly r(zero_);
    r.c_.reserve(c_.size());
    for (const R& v : c_) r.c_.push_back(v * s);
    r.trim();
    return r;
  }

  bool operator==(const RingPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  /* substitute t -> t + a:  coefficient of t^d picks up C(e, d) a^{e-d} c_e */
  RingPoly shifted(const Rational& a) const {
    RingPoly r(zero_);
    r.c_.assign(c_.size(), zero_);
    for (size_t e = 0; e < c_.size(); ++e) {
      if (c_[e].is_zero()) continue;
      Rational apow(1);
      for (size_t k = 0; k <= e; ++k, apow *= a) {
        size_t d = e - k;
        r.c_[d] = r.c_[d] + c_[e] * (binomial(long(e), long(d)) * apow);
      }
    }
    r.trim();
    return r;
  }

  R eval(const Rational& x) const {
    R v = zero_;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  /* exact division by the monic linear factor (t + lambda):
   * returns (quotient, remainder) with remainder = eval(-lambda) */
  std::pair<RingPoly, R> divide_linear(const Rational& lambda) const {
    if (c_.empty()) return {RingPoly(zero_), zero_};
    RingPoly q(zero_);
    q.c_.assign(c_.size() > 1 ? c_.size() - 1 : 0, zero_);
    R carry = zero_;
    for (size_t i = c_.size(); i-- > 1;) {
      carry = c_[i] + carry * (-lambda);
      q.c_[i - 1] = carry;
    }
    R rem = c_[0] + carry * (-lambda);
    q.trim();
    return {q, rem};
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  R zero_;
  std::vector<R> c_;
};

}  // namespace shiftarg
