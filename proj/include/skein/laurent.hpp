#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "skein/error.hpp"

namespace skein {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;
using Complex = std::complex<double>;

/// An element of Z[t, t^-1].
///
/// Terms are kept in a sparse exponent -> coefficient map. Zero coefficients
/// are never stored, so two polynomials are equal exactly when their maps are.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c) {                        // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(0, c);
  }

  static LaurentPoly monomial(const Integer& c, Exponent e) {
    LaurentPoly r;
    if (c != 0) r.terms_.emplace(e, c);
    return r;
  }

  /// t^e
  static LaurentPoly t(Exponent e = 1) { return monomial(1, e); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  std::optional<Exponent> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<Exponent> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// Units of Z[t, t^-1] are exactly the monomials +-t^k.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  /// True when the polynomial is a constant integer (possibly zero).
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Multiplication by t^k.
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  /// Adds c * t^e in place, keeping the canonical form.
  void add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  /// Value at a nonzero complex point, in double precision.
  Complex evaluate(Complex z) const {
    if (z == Complex(0.0, 0.0))
      throw DomainError(ErrorKind::ZeroEvaluationPoint, "cannot evaluate a Laurent polynomial at t = 0");
    Complex sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) sum += c.convert_to<double>() * integer_power(z, e);
    return sum;
  }

  /// Exact value at t = 1.
  Integer value_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Exact value at t = -1.
  Integer value_at_minus_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : Integer(-c);
    return s;
  }

  /// Canonical text form, highest power first: "-t^2 - t^-2", "3 + 2t^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      const Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += magnitude.str();
        continue;
      }
      if (magnitude != 1) out += magnitude.str();
      out += 't';
      if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  static Complex integer_power(Complex z, Exponent e) {
    Complex base = e < 0 ? Complex(1.0, 0.0) / z : z;
    auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    Complex result(1.0, 0.0);
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  TermMap terms_;
};

/// Exact quotient a / u for a unit u = +-t^k.
inline LaurentPoly div_unit(const LaurentPoly& a, const LaurentPoly& u) {
  if (!u.is_unit()) throw DomainError(ErrorKind::NotAUnit, "divisor " + u.to_string() + " is not of the form +-t^k");
  const auto& [k, sign] = *u.terms().begin();
  LaurentPoly q = a.shifted(-k);
  return sign < 0 ? -q : q;
}

/// The quantum integer [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}).
///
/// Expanded as t^{2n-2} + t^{2n-6} + ... + t^{-2n+2}; [0] = 0.
inline LaurentPoly quantum_int(unsigned n) {
  LaurentPoly r;
  for (unsigned j = 0; j < n; ++j) r.add_term(2 * static_cast<Exponent>(n) - 2 - 4 * static_cast<Exponent>(j), 1);
  return r;
}

/// Loop value of the k-th Jones-Wenzl idempotent, (-1)^k [k+1].
inline LaurentPoly delta(unsigned k) {
  LaurentPoly q = quantum_int(k + 1);
  return k % 2 == 0 ? q : -q;
}

/// A trivial 0-framed loop: -t^2 - t^-2.
inline LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

/// A single positive kink relative to the blackboard framing: -t^-3.
inline LaurentPoly kink_factor() { return LaurentPoly::monomial(-1, -3); }

/// t = e^{i pi / 2r}, the evaluation point used for Jones-Wenzl data.
inline Complex root_of_unity(int r) { return std::polar(1.0, std::numbers::pi / (2.0 * r)); }

}  // namespace skein
