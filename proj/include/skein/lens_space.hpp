#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/error.hpp"
#include "skein/laurent.hpp"
#include "skein/solid_torus.hpp"
#include "skein/winding.hpp"

namespace skein {

/// Gluing matrix [[a, p], [b, q]] of the two solid tori of L(p,q): the
/// meridian (0,1) of the first torus goes to (p,q), the core direction
/// (1,0) to (a,b). Gluing reverses orientation, so aq - bp = -1.
struct GluingMatrix {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;

  std::int64_t determinant() const noexcept { return a * q - b * p; }

  /// (m,n) -> (am + pn, bm + qn)
  Winding apply(std::int64_t m, std::int64_t n) const noexcept { return {a * m + p * n, b * m + q * n}; }

  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

namespace detail {

inline void require_orientation_reversing(const GluingMatrix& g) {
  if (g.determinant() != -1)
    throw DomainError(ErrorKind::BadDeterminant, "gluing matrix (a,b,p,q) = (" + std::to_string(g.a) + "," +
                                                     std::to_string(g.b) + "," + std::to_string(g.p) + "," +
                                                     std::to_string(g.q) + ") has aq - bp = " +
                                                     std::to_string(g.determinant()) + ", expected -1");
}

/// Floor-mod into [0, m).
inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Brings a gluing matrix to p >= 1 and |a| <= p/2 (ties toward a >= 0) by
/// the column operation (a,b) <- (a + kp, b + kq), which preserves both the
/// lens space and the determinant.
inline GluingMatrix normalize(GluingMatrix g) {
  detail::require_orientation_reversing(g);
  if (g.p == 0) throw DomainError(ErrorKind::DegenerateLens, "p = 0 describes S^1 x S^2, which has no finite spanning set");
  if (g.p < 0) g = {-g.a, -g.b, -g.p, -g.q};
  std::int64_t r = detail::floor_mod(g.a, g.p);
  if (2 * r > g.p) r -= g.p;
  const std::int64_t k = (r - g.a) / g.p;
  return {g.a + k * g.p, g.b + k * g.q, g.p, g.q};
}

/// The constant c_k with 1 (x) ((a+kp, b+kq) . u) = c_k (1 (x) ((a,b) . u))
/// for every u. Runs c_k = t^e L c_{k-1} - t^{2e} c_{k-2} in both directions
/// from c_0 = 1, c_1 = -t^-3, where e = aq - bp = -1 and L = -t^2 - t^-2.
inline LaurentPoly twist_constant(const GluingMatrix& g, std::int64_t k) {
  detail::require_orientation_reversing(g);
  const std::int64_t e = g.determinant();
  const LaurentPoly step = loop_value().shifted(e);
  LaurentPoly before(1);
  LaurentPoly cur = kink_factor();
  if (k == 0) return before;
  if (k > 0) {
    for (std::int64_t j = 1; j < k; ++j) {
      LaurentPoly next = step * cur - before.shifted(2 * e);
      before = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Walking down: c_{j-2} = t^{-2e} (t^e L c_{j-1} - c_j).
  LaurentPoly upper = std::move(cur);  // c_1
  LaurentPoly lower = std::move(before);  // c_0
  for (std::int64_t j = 0; j > k; --j) {
    LaurentPoly next = (step * lower - upper).shifted(-2 * e);
    upper = std::move(lower);
    lower = std::move(next);
  }
  return lower;
}

/// sum_k c_k (1 (x) alpha^k) for 0 <= k <= floor(p/2).
class LensElement {
 public:
  LensElement() = default;
  explicit LensElement(std::size_t size) : coeffs_(size) {}
  explicit LensElement(std::vector<LaurentPoly> coefficients) : coeffs_(std::move(coefficients)) {}

  const std::vector<LaurentPoly>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Highest index with a nonzero coefficient, or -1.
  long top_index() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    return -1;
  }

  LensElement& operator+=(const LensElement& o) {
    check_size(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  LensElement& operator-=(const LensElement& o) {
    check_size(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend LensElement operator+(LensElement a, const LensElement& b) { return a += b; }
  friend LensElement operator-(LensElement a, const LensElement& b) { return a -= b; }
  friend LensElement operator*(const LaurentPoly& s, LensElement a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend bool operator==(const LensElement&, const LensElement&) = default;

  /// Reinterprets sum_k c_k (1 (x) alpha^k) as the solid-torus element
  /// sum_k c_k alpha^k of the second torus.
  SolidTorusElement as_solid_torus() const { return SolidTorusElement(coeffs_); }

 private:
  void check_size(const LensElement& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("lens elements of different lens spaces");
  }

  std::vector<LaurentPoly> coeffs_;
};

/// Rewrites elements 1 (x) u of K_t(L(p,q)) over the spanning set
/// {1 (x) alpha^k : k <= floor(p/2)}.
///
/// The relations used are x_{m,n} (x) 1 = 1 (x) x_{am+pn, bm+qn} together
/// with the twist constants. Memo tables live in the reducer instance, so one
/// reducer should not be shared across threads.
class LensReducer {
 public:
  explicit LensReducer(const GluingMatrix& g) : g_(normalize(g)), half_(static_cast<std::size_t>(g_.p / 2)) {}

  /// The normalized matrix that fixes the meaning of (m,k) indices.
  const GluingMatrix& matrix() const noexcept { return g_; }
  std::size_t span_size() const noexcept { return half_ + 1; }

  LensElement reduce(const SolidTorusElement& u) {
    LensElement out(span_size());
    const auto& coeffs = u.coefficients();
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      if (coeffs[n].is_zero()) continue;
      out += coeffs[n] * reduce_monomial(static_cast<unsigned>(n));
    }
    return out;
  }

  /// 1 (x) alpha^n, decomposing n = ma + kp with the smallest m >= 0.
  const LensElement& reduce_monomial(unsigned n) {
    if (auto it = monomials_.find(n); it != monomials_.end()) return it->second;
    LensElement value = n <= half_ ? basis_vector(n) : reduce_monomial_via(n, smallest_m(n));
    return monomials_.emplace(n, std::move(value)).first->second;
  }

  /// 1 (x) alpha^n using the decomposition n = ma + kp for the given m >= 0.
  /// Lower-order terms are reduced through reduce_monomial. Any valid m gives
  /// the same answer.
  LensElement reduce_monomial_via(unsigned n, std::int64_t m) {
    const auto big_n = static_cast<std::int64_t>(n);
    if (m < 0 || (big_n - m * g_.a) % g_.p != 0)
      throw DomainError(ErrorKind::NoDecomposition,
                        std::to_string(n) + " is not m*a + k*p for m = " + std::to_string(m));
    if (n == 0) return basis_vector(0);
    const std::int64_t k = (big_n - m * g_.a) / g_.p;
    // 1 (x) x_{n, mb+kq} = c (1 (x) alpha^n) + 1 (x) f(alpha), deg f < n.
    SolidTorusElement x = curve_image(big_n, m * g_.b + k * g_.q);
    const LaurentPoly lead = x.leading_coefficient();
    SolidTorusElement lower = x - SolidTorusElement::alpha_power(n, lead);
    LensElement rhs = curve_in_span(m, k) - reduce(lower);
    return LensElement(divide_all(rhs, lead));
  }

  /// 1 (x) x_{ma+kp, mb+kq} over the spanning set, by induction on m.
  const LensElement& curve_in_span(std::int64_t m, std::int64_t k) {
    if (m < 0) return curve_in_span(-m, -k);
    const auto key = std::make_pair(m, k);
    if (auto it = curves_.find(key); it != curves_.end()) return it->second;
    LensElement value = compute_curve_in_span(m, k);
    return curves_.emplace(key, std::move(value)).first->second;
  }

 private:
  LensElement compute_curve_in_span(std::int64_t m, std::int64_t k) {
    if (m == 0) {
      // (kp, kq) is the image of (0,k), the k-th power of the first meridian.
      const LaurentPoly sign((k % 2 == 0) ? 1 : -1);
      return sign * (LaurentPoly::t(2 * k) + LaurentPoly::t(-2 * k)) * basis_vector(0);
    }
    if (m == 1) return twist_constant(g_, k) * low_degree(curve_image(g_.a, g_.b));

    // Split (ma+kp, mb+kq) = u + v with u the image of (1, k-k0) and v the
    // image of (m-1, k0), where k0 brings |ma + k0 p| <= p/2. The product
    // u * v = t^D (u+v)_T + t^-D (u-v)_T has D = (m-1)(k-k0) - k0.
    const std::int64_t k0 = nearest_column(m);
    const std::int64_t d = (m - 1) * (k - k0) - k0;
    const Winding small = g_.apply(m, k0);
    // (a,b) * v = t^-k0 (image of (m,k0))_T + t^k0 (image of (m-2,k0))_T.
    LensElement ab_times_v = LaurentPoly::t(-k0) * low_degree(curve_image(small.p, small.q));
    ab_times_v += LaurentPoly::t(k0) * curve_in_span(m - 2, k0);
    LensElement out = (twist_constant(g_, k - k0).shifted(-d)) * ab_times_v;
    out -= LaurentPoly::t(-2 * d) * curve_in_span(m - 2, -(k - 2 * k0));
    return out;
  }

  /// k0 minimizing |ma + k0 p|.
  std::int64_t nearest_column(std::int64_t m) const {
    const std::int64_t ma = m * g_.a;
    std::int64_t r = detail::floor_mod(ma, g_.p);
    if (2 * r > g_.p) r -= g_.p;
    return (r - ma) / g_.p;
  }

  std::int64_t smallest_m(unsigned n) const {
    for (std::int64_t m = 0; m < g_.p; ++m)
      if ((static_cast<std::int64_t>(n) - m * g_.a) % g_.p == 0) return m;
    // gcd(a, p) = 1 whenever aq - bp = -1.
    throw DomainError(ErrorKind::NoDecomposition, std::to_string(n) + " has no decomposition m*a + k*p");
  }

  LensElement basis_vector(std::size_t i) const {
    std::vector<LaurentPoly> v(span_size());
    v.at(i) = LaurentPoly(1);
    return LensElement(std::move(v));
  }

  LensElement low_degree(const SolidTorusElement& f) const {
    if (f.degree() > static_cast<long>(half_)) throw std::logic_error("polynomial outside the spanning set");
    std::vector<LaurentPoly> v(span_size());
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) v[i] = f.coefficients()[i];
    return LensElement(std::move(v));
  }

  static std::vector<LaurentPoly> divide_all(const LensElement& e, const LaurentPoly& unit) {
    std::vector<LaurentPoly> v;
    v.reserve(e.size());
    for (const auto& c : e.coefficients()) v.push_back(div_unit(c, unit));
    return v;
  }

  GluingMatrix g_;
  std::size_t half_;
  std::map<unsigned, LensElement> monomials_;
  std::map<std::pair<std::int64_t, std::int64_t>, LensElement> curves_;
};

/// The class of 1 (x) u in the span of {1 (x) alpha^k : k <= floor(p/2)}.
inline LensElement lens_reduce(const GluingMatrix& g, const SolidTorusElement& u) { return LensReducer(g).reduce(u); }

/// 1 (x) x_{ma+kp, mb+kq} over the spanning set. The matrix must already be
/// normalized, since (m,k) are read against its (a,b) column.
inline LensElement lens_curve_in_span(const GluingMatrix& g, std::int64_t m, std::int64_t k) {
  LensReducer reducer(g);
  if (!(reducer.matrix() == g)) throw std::invalid_argument("gluing matrix is not normalized");
  return reducer.curve_in_span(m, k);
}

}  // namespace skein
