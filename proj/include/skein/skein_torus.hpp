#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "skein/chebyshev.hpp"
#include "skein/error.hpp"
#include "skein/laurent.hpp"
#include "skein/nc_torus.hpp"
#include "skein/winding.hpp"

namespace skein {

/// A basis class of the torus skein algebra: the empty skein, or (p,q)_T in
/// normalized form (p > 0, or p = 0 and q > 0).
///
/// (p,q)_T is T_d applied to the primitive curve (p/d, q/d), d = gcd(p,q).
/// Curves are unoriented, so (p,q)_T and (-p,-q)_T coincide. The raw index
/// (0,0) is T_0 = 2 times the empty skein and is never stored as a curve.
class CurveClass {
 public:
  static CurveClass empty() { return CurveClass(); }

  /// Requires (p,q) != (0,0); flips the sign into normal form.
  static CurveClass curve(Winding w) {
    if (w.p < 0 || (w.p == 0 && w.q < 0)) w = -w;
    return CurveClass(w);
  }

  bool is_empty() const noexcept { return empty_; }
  Winding winding() const noexcept { return w_; }
  std::int64_t p() const noexcept { return w_.p; }
  std::int64_t q() const noexcept { return w_.q; }

  /// Display and storage order: empty first, then p ascending, then q
  /// descending.
  friend std::strong_ordering operator<=>(const CurveClass& a, const CurveClass& b) {
    if (a.empty_ != b.empty_) return a.empty_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.empty_) return std::strong_ordering::equal;
    if (auto c = a.w_.p <=> b.w_.p; c != 0) return c;
    return b.w_.q <=> a.w_.q;
  }
  friend bool operator==(const CurveClass& a, const CurveClass& b) { return (a <=> b) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const CurveClass& c) {
    if (c.empty_) return os << "1";
    return os << "T(" << c.w_.p << ',' << c.w_.q << ')';
  }

 private:
  CurveClass() = default;
  explicit CurveClass(Winding w) : empty_(false), w_(w) {}

  bool empty_ = true;
  Winding w_{};
};

/// A finite combination of basis classes of K_t(T^2 x I).
class SkeinElement {
 public:
  using TermMap = std::map<CurveClass, LaurentPoly>;

  SkeinElement() = default;

  static SkeinElement scalar(const LaurentPoly& c) {
    SkeinElement r;
    r.add_term(CurveClass::empty(), c);
    return r;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly coefficient(const CurveClass& cls) const {
    auto it = terms_.find(cls);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add_term(const CurveClass& cls, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(cls, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Adds c (w)_T for a raw, possibly unnormalized index.
  void add_curve(Winding w, const LaurentPoly& c) {
    if (w.p == 0 && w.q == 0) {
      add_term(CurveClass::empty(), c + c);
    } else {
      add_term(CurveClass::curve(w), c);
    }
  }

  SkeinElement& operator+=(const SkeinElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SkeinElement& operator-=(const SkeinElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator-(SkeinElement a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend SkeinElement operator*(const LaurentPoly& s, const SkeinElement& a) {
    SkeinElement r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
  }

  /// The product-to-sum formula, extended bilinearly:
  ///
  ///   (p,q)_T * (r,s)_T = t^D (p+r, q+s)_T + t^-D (p-r, q-s)_T,  D = ps - qr.
  friend SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
    SkeinElement r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        const LaurentPoly c = ca * cb;
        if (ka.is_empty()) {
          r.add_term(kb, c);
        } else if (kb.is_empty()) {
          r.add_term(ka, c);
        } else {
          const Winding u = ka.winding();
          const Winding v = kb.winding();
          const std::int64_t d = determinant(u, v);
          r.add_curve(u + v, c.shifted(d));
          r.add_curve(u - v, c.shifted(-d));
        }
      }
    }
    return r;
  }
  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

 private:
  TermMap terms_;
};

/// c (p,q)_T, normalized. (0,0) yields 2c times the empty skein.
inline SkeinElement curve_class(std::int64_t p, std::int64_t q, const LaurentPoly& c = LaurentPoly(1)) {
  SkeinElement r;
  r.add_curve({p, q}, c);
  return r;
}

/// The embedding into the noncommutative torus: (p,q)_T -> e_{p,q} + e_{-p,-q},
/// empty -> e_{0,0}.
inline NTElement embed(const SkeinElement& a) {
  NTElement r;
  for (const auto& [k, c] : a.terms()) {
    if (k.is_empty()) {
      r.add_term({0, 0}, c);
    } else {
      r.add_term(k.winding(), c);
      r.add_term(-k.winding(), c);
    }
  }
  return r;
}

/// Inverse of embed on the theta-fixed subalgebra.
inline SkeinElement unembed(const NTElement& n) {
  if (!is_symmetric(n)) throw DomainError(ErrorKind::NotSymmetric, "element is not fixed by e_{p,q} -> e_{-p,-q}");
  SkeinElement r;
  for (const auto& [w, c] : n.terms()) {
    if (w.p == 0 && w.q == 0) {
      r.add_term(CurveClass::empty(), c);
    } else if (w.p > 0 || (w.p == 0 && w.q > 0)) {
      r.add_term(CurveClass::curve(w), c);
    }
  }
  return r;
}

/// d parallel copies of the primitive (p,q) curve, i.e. x^d with x = (p,q),
/// rewritten in the (kp,kq)_T basis.
inline SkeinElement multicurve(unsigned d, std::int64_t p, std::int64_t q) {
  if (!is_primitive({p, q}))
    throw DomainError(ErrorKind::NotPrimitive, "multicurve needs gcd(p,q) = 1, got (" + std::to_string(p) + "," +
                                                   std::to_string(q) + ")");
  if (d == 0) return SkeinElement::scalar(1);
  SkeinElement r;
  for (const auto& [k, c] : power_to_chebyshev(d)) {
    const auto kk = static_cast<std::int64_t>(k);
    r.add_curve({kk * p, kk * q}, LaurentPoly(c));
  }
  return r;
}

/// Maximum over pairs of basis terms of |ps - qr|. For classes m(p',q') and
/// n(r',s') with primitive parts this is m n |p's' - q'r'|. The empty skein
/// meets nothing.
inline Integer intersection_number(const SkeinElement& a, const SkeinElement& b) {
  Integer best = 0;
  for (const auto& [ka, ca] : a.terms()) {
    if (ka.is_empty()) continue;
    for (const auto& [kb, cb] : b.terms()) {
      if (kb.is_empty()) continue;
      Integer d = Integer(ka.p()) * kb.q() - Integer(ka.q()) * kb.p();
      if (d < 0) d = -d;
      if (d > best) best = d;
    }
  }
  return best;
}

}  // namespace skein
