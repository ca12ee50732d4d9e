#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "aps/arith.hpp"

namespace aps {

/// Dense univariate polynomial, coefficients in increasing degree.
template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  F leading() const { return c_.empty() ? F(0) : c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }

  template <class X>
  X operator()(const X& x) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& p) { return Poly{s} * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }
  std::vector<F> c_;
};

using RatPoly = Poly<Rat>;
using QuadPoly = Poly<QuadExt>;

std::string to_string(const RatPoly& p, const std::string& var = "t");
std::string to_string(const QuadPoly& p, const std::string& var = "t");

/// Polynomial remainder over Q (b non-zero).
RatPoly poly_rem(const RatPoly& a, const RatPoly& b);

/// Number of distinct real roots (Sturm sequence). p must be non-zero.
int count_real_roots(const RatPoly& p);

/// All rational roots of p (distinct, ascending). Exact.
std::vector<Rat> rational_roots(const RatPoly& p);

}  // namespace aps
