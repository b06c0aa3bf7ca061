#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace skein {

/// A pair of winding numbers (p, q) on the torus.
struct Winding {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend constexpr Winding operator+(Winding a, Winding b) noexcept { return {a.p + b.p, a.q + b.q}; }
  friend constexpr Winding operator-(Winding a, Winding b) noexcept { return {a.p - b.p, a.q - b.q}; }
  friend constexpr Winding operator-(Winding a) noexcept { return {-a.p, -a.q}; }
  friend constexpr Winding operator*(std::int64_t k, Winding a) noexcept { return {k * a.p, k * a.q}; }
  friend constexpr auto operator<=>(const Winding&, const Winding&) = default;

  friend std::ostream& operator<<(std::ostream& os, Winding w) { return os << '(' << w.p << ',' << w.q << ')'; }
};

/// ps - qr for u = (p,q), v = (r,s).
constexpr std::int64_t determinant(Winding u, Winding v) noexcept { return u.p * v.q - u.q * v.p; }

/// gcd(p, q) >= 0, with gcd(0, 0) = 0.
constexpr std::int64_t multiplicity(Winding w) noexcept { return std::gcd(w.p, w.q); }

constexpr bool is_primitive(Winding w) noexcept { return multiplicity(w) == 1; }

}  // namespace skein
