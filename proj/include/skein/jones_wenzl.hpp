#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skein/error.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_torus.hpp"

namespace skein {

namespace detail {

inline void require_primitive(std::int64_t p, std::int64_t q) {
  if (!is_primitive({p, q}))
    throw DomainError(ErrorKind::NotPrimitive,
                      "(" + std::to_string(p) + "," + std::to_string(q) + ") is not a primitive curve");
}

}  // namespace detail

/// (np,nq)_JW: n parallel (p,q) curves decorated with the n-th Jones-Wenzl
/// idempotent, in the (p,q)_T basis.
///
///   (np,nq)_JW = (np,nq)_T + ((n-2)p,(n-2)q)_T + ...
///
/// For even n the last summand is the empty skein with coefficient 1 (the
/// image of f^(0)), not (0,0)_T = 2.
inline SkeinElement jw_expand(unsigned n, std::int64_t p, std::int64_t q) {
  detail::require_primitive(p, q);
  SkeinElement r;
  for (std::int64_t m = n; m > 0; m -= 2) r.add_curve({m * p, m * q}, 1);
  if (n % 2 == 0) r.add_term(CurveClass::empty(), 1);
  return r;
}

/// The same element from (np,nq)_JW = (p,q) * ((n-1)p,(n-1)q)_JW - ((n-2)p,(n-2)q)_JW
/// seeded with the empty skein and (p,q)_T.
inline SkeinElement jw_via_recurrence(unsigned n, std::int64_t p, std::int64_t q) {
  detail::require_primitive(p, q);
  SkeinElement prev = SkeinElement::scalar(1);
  if (n == 0) return prev;
  const SkeinElement curve = curve_class(p, q);
  SkeinElement cur = curve;
  for (unsigned k = 1; k < n; ++k) {
    SkeinElement next = curve * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Trace of f^(n): (-1)^n [n+1].
inline LaurentPoly jw_trace(unsigned n) { return delta(n); }

/// Closes up the expansion in a ball: (kp,kq)_T -> (-t^2)^k + (-t^-2)^k and
/// the empty skein -> 1.
inline LaurentPoly jw_trace_via_expansion(unsigned n, std::int64_t p, std::int64_t q) {
  const SkeinElement e = jw_expand(n, p, q);
  LaurentPoly total;
  for (const auto& [cls, c] : e.terms()) {
    if (cls.is_empty()) {
      total += c;
      continue;
    }
    const std::int64_t k = multiplicity(cls.winding());
    const LaurentPoly sign((k % 2 == 0) ? 1 : -1);
    total += c * sign * (LaurentPoly::t(2 * k) + LaurentPoly::t(-2 * k));
  }
  return total;
}

/// f^(n) exists at t = e^{i pi/2r} only for 0 <= n <= r - 2.
inline void require_idempotent_defined(unsigned n, int r) {
  if (r < 2 || static_cast<long>(n) > static_cast<long>(r) - 2)
    throw DomainError(ErrorKind::IdempotentUndefined, "f^(" + std::to_string(n) + ") is undefined at t = e^{i pi/" +
                                                          std::to_string(2 * r) + "}; need 0 <= n <= r - 2");
}

/// Coefficients of jw_expand evaluated at t = e^{i pi/2r}.
inline std::vector<std::pair<CurveClass, Complex>> jw_expand_at_root(unsigned n, std::int64_t p, std::int64_t q,
                                                                     int r) {
  require_idempotent_defined(n, r);
  const Complex t = root_of_unity(r);
  std::vector<std::pair<CurveClass, Complex>> out;
  const SkeinElement expansion = jw_expand(n, p, q);
  for (const auto& [cls, c] : expansion.terms()) out.emplace_back(cls, c.evaluate(t));
  return out;
}

/// jw_trace(n) at t = e^{i pi/2r}.
inline Complex jw_trace_at_root(unsigned n, int r) {
  require_idempotent_defined(n, r);
  return jw_trace(n).evaluate(root_of_unity(r));
}

}  // namespace skein
