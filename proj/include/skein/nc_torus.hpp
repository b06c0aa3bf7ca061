#pragma once

#include <map>
#include <utility>

#include "skein/laurent.hpp"
#include "skein/winding.hpp"

namespace skein {

/// A finite combination of the basis vectors e_{p,q} of the Laurent part of
/// the noncommutative torus. Multiplication is
///
///   e_{p,q} * e_{r,s} = t^{ps - qr} e_{p+r, q+s},
///
/// so e_{0,0} is the unit.
class NTElement {
 public:
  using TermMap = std::map<Winding, LaurentPoly>;

  NTElement() = default;

  static NTElement basis(std::int64_t p, std::int64_t q, LaurentPoly c = LaurentPoly(1)) {
    NTElement r;
    r.add_term({p, q}, c);
    return r;
  }
  static NTElement scalar(const LaurentPoly& c) { return basis(0, 0, c); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly coefficient(Winding w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add_term(Winding w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NTElement& operator+=(const NTElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NTElement& operator-=(const NTElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  friend NTElement operator+(NTElement a, const NTElement& b) { return a += b; }
  friend NTElement operator-(NTElement a, const NTElement& b) { return a -= b; }
  friend NTElement operator-(NTElement a) {
    for (auto& [w, c] : a.terms_) c = -c;
    return a;
  }
  friend NTElement operator*(const LaurentPoly& s, const NTElement& a) {
    NTElement r;
    for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
    return r;
  }
  friend NTElement operator*(const NTElement& a, const NTElement& b) {
    NTElement r;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add_term(u + v, (cu * cv).shifted(determinant(u, v)));
    return r;
  }
  friend bool operator==(const NTElement&, const NTElement&) = default;

 private:
  TermMap terms_;
};

/// The involution e_{p,q} -> e_{-p,-q}.
inline NTElement theta(const NTElement& a) {
  NTElement r;
  for (const auto& [w, c] : a.terms()) r.add_term(-w, c);
  return r;
}

/// Membership in the fixed subalgebra of theta, spanned by e_{p,q} + e_{-p,-q}.
inline bool is_symmetric(const NTElement& a) { return theta(a) == a; }

}  // namespace skein
