#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_torus.hpp"

namespace skein {

/// An element of K_t(S^1 x D^2) = Z[t,t^-1][alpha], alpha the core curve.
/// Dense coefficients indexed by the power of alpha, trailing zeros trimmed.
class SolidTorusElement {
 public:
  SolidTorusElement() = default;
  explicit SolidTorusElement(std::vector<LaurentPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static SolidTorusElement scalar(const LaurentPoly& c) { return SolidTorusElement({c}); }

  /// alpha^n
  static SolidTorusElement alpha_power(unsigned n, const LaurentPoly& c = LaurentPoly(1)) {
    std::vector<LaurentPoly> v(n + 1);
    v[n] = c;
    return SolidTorusElement(std::move(v));
  }

  /// alpha_n = T_n(alpha); alpha_0 = 2.
  static SolidTorusElement alpha_chebyshev(unsigned n) {
    const IntPolynomial tn = chebyshev_T(n);
    std::vector<LaurentPoly> v;
    v.reserve(tn.coefficients().size());
    for (const auto& c : tn.coefficients()) v.emplace_back(c);
    return SolidTorusElement(std::move(v));
  }

  const std::vector<LaurentPoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree in alpha; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  LaurentPoly coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : LaurentPoly(); }
  LaurentPoly leading_coefficient() const { return coeffs_.empty() ? LaurentPoly() : coeffs_.back(); }

  SolidTorusElement times_alpha() const {
    if (is_zero()) return {};
    std::vector<LaurentPoly> v;
    v.reserve(coeffs_.size() + 1);
    v.emplace_back();
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return SolidTorusElement(std::move(v));
  }

  SolidTorusElement& operator+=(const SolidTorusElement& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  SolidTorusElement& operator-=(const SolidTorusElement& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend SolidTorusElement operator+(SolidTorusElement a, const SolidTorusElement& b) { return a += b; }
  friend SolidTorusElement operator-(SolidTorusElement a, const SolidTorusElement& b) { return a -= b; }
  friend SolidTorusElement operator-(SolidTorusElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend SolidTorusElement operator*(const LaurentPoly& s, SolidTorusElement a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const SolidTorusElement&, const SolidTorusElement&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<LaurentPoly> coeffs_;
};

/// x_{p,q}, the image of (p,q)_T in the solid torus, where (0,1) is the
/// meridian and (1,0) the core.
///
/// x_{p,q} = t^{-pq} y_{p,q} with y_{p,q} = alpha y_{p-1,q} - y_{p-2,q},
/// y_{0,q} = (-t^2)^q + (-t^-2)^q and y_{1,q} = (-t^-2)^q alpha, so that
/// x_{1,q} = (-t^-3)^q alpha. Negative p uses x_{p,q} = x_{-p,-q}.
inline SolidTorusElement curve_image(std::int64_t p, std::int64_t q) {
  if (p < 0) {
    p = -p;
    q = -q;
  }
  const bool odd_q = (q % 2) != 0;
  const LaurentPoly sign(odd_q ? -1 : 1);
  SolidTorusElement y_prev = SolidTorusElement::scalar(sign * (LaurentPoly::t(2 * q) + LaurentPoly::t(-2 * q)));
  if (p == 0) return y_prev;
  SolidTorusElement y_cur = SolidTorusElement::alpha_power(1, sign * LaurentPoly::t(-2 * q));
  for (std::int64_t k = 1; k < p; ++k) {
    SolidTorusElement next = y_cur.times_alpha() - y_prev;
    y_prev = std::move(y_cur);
    y_cur = std::move(next);
  }
  return LaurentPoly::t(-p * q) * y_cur;
}

/// The quotient map pi: K_t(T^2 x I) -> K_t(S^1 x D^2), (p,q)_T -> x_{p,q}.
inline SolidTorusElement project(const SkeinElement& a) {
  SolidTorusElement r;
  for (const auto& [k, c] : a.terms()) {
    if (k.is_empty()) {
      r += SolidTorusElement::scalar(c);
    } else {
      r += c * curve_image(k.p(), k.q());
    }
  }
  return r;
}

/// A preimage of u under project inside the subalgebra generated by (1,0):
/// alpha^n lifts to n parallel copies of (1,0).
inline SkeinElement lift(const SolidTorusElement& u) {
  SkeinElement r;
  const auto& coeffs = u.coefficients();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n].is_zero()) continue;
    r += coeffs[n] * multicurve(static_cast<unsigned>(n), 1, 0);
  }
  return r;
}

/// The left action of the torus algebra on the solid torus: pi(A * lift(u)).
inline SolidTorusElement act(const SkeinElement& a, const SolidTorusElement& u) { return project(a * lift(u)); }

/// Membership in the kernel of pi, the left ideal generated by
/// (0,1) + t^2 + t^-2 and (1,1) + t^-3 (1,0).
inline bool in_kernel(const SkeinElement& a) { return project(a).is_zero(); }

}  // namespace skein
