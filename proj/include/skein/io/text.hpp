#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/lens_space.hpp"
#include "skein/nc_torus.hpp"
#include "skein/skein_torus.hpp"
#include "skein/solid_torus.hpp"

namespace skein::io {

namespace detail {

// Joins "coefficient * atom" terms. An empty atom stands for the unit.
class TermWriter {
 public:
  void exact(const LaurentPoly& c, const std::string& atom) {
    if (c.is_zero()) return;
    if (c.is_constant()) {
      const Integer v = c.coefficient(0);
      const bool negative = v < 0;
      const Integer magnitude = negative ? Integer(-v) : v;
      separator(negative);
      if (atom.empty()) {
        out_ += magnitude.str();
      } else {
        if (magnitude != 1) out_ += magnitude.str() + "*";
        out_ += atom;
      }
      return;
    }
    separator(false);
    out_ += "(" + c.to_string() + ")";
    if (!atom.empty()) out_ += "*" + atom;
  }

  void numeric(Complex z, const std::string& atom) {
    separator(false);
    out_ += "(" + complex_text(z) + ")";
    if (!atom.empty()) out_ += "*" + atom;
  }

  std::string str() const { return out_.empty() ? "0" : out_; }

  static std::string complex_text(Complex z) {
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
  }

 private:
  void separator(bool negative) {
    if (out_.empty()) {
      if (negative) out_ += "-";
    } else {
      out_ += negative ? " - " : " + ";
    }
  }

  std::string out_;
};

inline std::string atom_text(const CurveClass& cls) {
  if (cls.is_empty()) return {};
  return "T(" + std::to_string(cls.p()) + "," + std::to_string(cls.q()) + ")";
}

inline std::string atom_text(Winding w) { return "e(" + std::to_string(w.p) + "," + std::to_string(w.q) + ")"; }

inline std::string alpha_atom(std::size_t n) { return n == 0 ? std::string() : "a(" + std::to_string(n) + ")"; }

// e-basis terms in display order: p ascending, then q descending.
inline std::vector<std::pair<Winding, LaurentPoly>> ordered_terms(const NTElement& n) {
  std::vector<std::pair<Winding, LaurentPoly>> v(n.terms().begin(), n.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.p != y.first.p) return x.first.p < y.first.p;
    return x.first.q > y.first.q;
  });
  return v;
}

}  // namespace detail

/// Text form that parses back to the same value, e.g.
/// "(t)*T(1,1) + (t^-1)*T(1,-1)".
inline std::string to_text(const SkeinElement& a) {
  detail::TermWriter w;
  for (const auto& [cls, c] : a.terms()) w.exact(c, detail::atom_text(cls));
  return w.str();
}

inline std::string to_text(const NTElement& n) {
  detail::TermWriter w;
  for (const auto& [idx, c] : detail::ordered_terms(n)) w.exact(c, detail::atom_text(idx));
  return w.str();
}

inline std::string to_text(const SolidTorusElement& u) {
  detail::TermWriter w;
  const auto& c = u.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) w.exact(c[n], detail::alpha_atom(n));
  return w.str();
}

inline std::string to_text(const LaurentPoly& c) { return c.to_string(); }

/// "(c_k) * (1 (x) a^k)" terms over the spanning set.
inline std::string to_text(const LensElement& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + e[k].to_string() + ") * (1 (x) a^" + std::to_string(k) + ")";
  }
  return out.empty() ? "0" : out;
}

/// Text form with every coefficient evaluated at t = z.
inline std::string to_text_at(const SkeinElement& a, Complex z) {
  detail::TermWriter w;
  for (const auto& [cls, c] : a.terms()) w.numeric(c.evaluate(z), detail::atom_text(cls));
  return w.str();
}

inline std::string to_text_at(const NTElement& n, Complex z) {
  detail::TermWriter w;
  for (const auto& [idx, c] : detail::ordered_terms(n)) w.numeric(c.evaluate(z), detail::atom_text(idx));
  return w.str();
}

inline std::string to_text_at(const SolidTorusElement& u, Complex z) {
  detail::TermWriter w;
  const auto& c = u.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (!c[n].is_zero()) w.numeric(c[n].evaluate(z), detail::alpha_atom(n));
  return w.str();
}

inline std::string to_text_at(const LaurentPoly& c, Complex z) { return detail::TermWriter::complex_text(c.evaluate(z)); }

inline std::string to_text_at(const LensElement& e, Complex z) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + detail::TermWriter::complex_text(e[k].evaluate(z)) + ") * (1 (x) a^" + std::to_string(k) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace skein::io
