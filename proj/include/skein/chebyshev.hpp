#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Dense integer polynomial in an abstract variable x; index = degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static IntPolynomial x_power(unsigned n) {
    std::vector<Integer> c(n + 1, 0);
    c[n] = 1;
    return IntPolynomial(std::move(c));
  }

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Integer(0); }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiplication by x.
  IntPolynomial times_x() const {
    if (is_zero()) return {};
    std::vector<Integer> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// T_n with T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}, so that
/// T_n(2 cos theta) = 2 cos(n theta).
inline IntPolynomial chebyshev_T(unsigned n) {
  IntPolynomial prev(std::vector<Integer>{2});
  if (n == 0) return prev;
  IntPolynomial cur = IntPolynomial::x_power(1);
  for (unsigned k = 1; k < n; ++k) {
    IntPolynomial next = cur.times_x() - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Coefficients c_k with x^n = sum_k c_k T_k, the k = 0 entry counted
/// against T_0 = 2.
///
/// Writing x = z + 1/z gives x^n = sum_j C(n, j) z^{n-2j}, and pairing z^k
/// with z^-k yields T_k. The middle binomial C(n, n/2) pairs with T_0 = 2;
/// it is even for every n >= 2, so the expansion stays integral. x^0 = T_0/2
/// has no integral expansion and is rejected.
inline std::map<unsigned, Integer> power_to_chebyshev(unsigned n) {
  if (n == 0) throw std::invalid_argument("x^0 = T_0/2 has no integral Chebyshev expansion");
  std::map<unsigned, Integer> out;
  Integer binom = 1;  // C(n, j)
  for (unsigned j = 0; 2 * j <= n; ++j) {
    const unsigned k = n - 2 * j;
    if (k > 0) {
      out.emplace(k, binom);
    } else {
      if (binom % 2 != 0) throw std::logic_error("odd central binomial in Chebyshev expansion");
      out.emplace(0, binom / 2);
    }
    binom = binom * (n - j) / (j + 1);
  }
  return out;
}

/// T_n(2 cos theta) computed with the three-term recurrence in doubles.
inline double chebyshev_eval_trig(unsigned n, double theta) {
  const double x = 2.0 * std::cos(theta);
  double prev = 2.0;
  if (n == 0) return prev;
  double cur = x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace skein
