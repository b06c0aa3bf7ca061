#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skein/laurent.hpp"
#include "skein/lens_space.hpp"
#include "skein/nc_torus.hpp"
#include "skein/skein_torus.hpp"
#include "skein/solid_torus.hpp"

// JSON forms (see docs/json-format.md):
//   LaurentPoly       [[exponent, "coefficient"], ...]   exponent ascending
//   NTElement         [{"p": P, "q": Q, "coeff": <LaurentPoly>}, ...]
//   SkeinElement      [{"class": "empty", "coeff": ...} | {"class": "curve", "p": P, "q": Q, "coeff": ...}, ...]
//   SolidTorusElement [[degree, <LaurentPoly>], ...]      degree ascending, zero terms omitted
//   LensElement       [<LaurentPoly>, ...]                dense, index k = power of alpha
// Evaluated output replaces every <LaurentPoly> with [re, im].

namespace skein::io {

using Json = nlohmann::json;

/// Malformed JSON input; the CLI reports it as a parse error.
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json to_json(const LaurentPoly& c) {
  Json arr = Json::array();
  for (const auto& [e, v] : c.terms()) arr.push_back(Json::array({e, v.str()}));
  return arr;
}

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const NTElement& n) {
  Json arr = Json::array();
  for (const auto& [w, c] : n.terms()) arr.push_back({{"p", w.p}, {"q", w.q}, {"coeff", to_json(c)}});
  return arr;
}

inline Json to_json(const SkeinElement& a) {
  Json arr = Json::array();
  for (const auto& [cls, c] : a.terms()) {
    if (cls.is_empty()) {
      arr.push_back({{"class", "empty"}, {"coeff", to_json(c)}});
    } else {
      arr.push_back({{"class", "curve"}, {"p", cls.p()}, {"q", cls.q()}, {"coeff", to_json(c)}});
    }
  }
  return arr;
}

inline Json to_json(const SolidTorusElement& u) {
  Json arr = Json::array();
  const auto& c = u.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (!c[n].is_zero()) arr.push_back(Json::array({n, to_json(c[n])}));
  return arr;
}

inline Json to_json(const LensElement& e) {
  Json arr = Json::array();
  for (const auto& c : e.coefficients()) arr.push_back(to_json(c));
  return arr;
}

inline Json to_json_at(const LaurentPoly& c, Complex z) { return to_json(c.evaluate(z)); }

inline Json to_json_at(const NTElement& n, Complex z) {
  Json arr = Json::array();
  for (const auto& [w, c] : n.terms()) arr.push_back({{"p", w.p}, {"q", w.q}, {"coeff", to_json(c.evaluate(z))}});
  return arr;
}

inline Json to_json_at(const SkeinElement& a, Complex z) {
  Json arr = Json::array();
  for (const auto& [cls, c] : a.terms()) {
    if (cls.is_empty()) {
      arr.push_back({{"class", "empty"}, {"coeff", to_json(c.evaluate(z))}});
    } else {
      arr.push_back({{"class", "curve"}, {"p", cls.p()}, {"q", cls.q()}, {"coeff", to_json(c.evaluate(z))}});
    }
  }
  return arr;
}

inline Json to_json_at(const SolidTorusElement& u, Complex z) {
  Json arr = Json::array();
  const auto& c = u.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (!c[n].is_zero()) arr.push_back(Json::array({n, to_json(c[n].evaluate(z))}));
  return arr;
}

inline Json to_json_at(const LensElement& e, Complex z) {
  Json arr = Json::array();
  for (const auto& c : e.coefficients()) arr.push_back(to_json(c.evaluate(z)));
  return arr;
}

namespace detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw JsonFormatError("malformed JSON: " + what);
}

inline std::int64_t get_int(const Json& j, const char* key) {
  expect(j.is_object() && j.contains(key) && j.at(key).is_number_integer(), std::string("missing integer '") + key + "'");
  return j.at(key).get<std::int64_t>();
}

}  // namespace detail

inline LaurentPoly laurent_from_json(const Json& j) {
  detail::expect(j.is_array(), "Laurent polynomial must be an array of [exponent, coefficient] pairs");
  LaurentPoly r;
  for (const auto& term : j) {
    detail::expect(term.is_array() && term.size() == 2 && term[0].is_number_integer(),
                   "Laurent term must be [exponent, coefficient]");
    Integer c;
    if (term[1].is_string()) {
      const auto s = term[1].get<std::string>();
      try {
        c = Integer(s);
      } catch (const std::exception&) {
        throw JsonFormatError("malformed JSON: bad integer \"" + s + "\"");
      }
    } else {
      detail::expect(term[1].is_number_integer(), "coefficient must be a decimal string or integer");
      c = Integer(term[1].get<std::int64_t>());
    }
    r.add_term(term[0].get<std::int64_t>(), c);
  }
  return r;
}

inline NTElement nc_from_json(const Json& j) {
  detail::expect(j.is_array(), "noncommutative-torus element must be an array");
  NTElement r;
  for (const auto& term : j) {
    detail::expect(term.is_object() && term.contains("coeff"), "term needs 'coeff'");
    r.add_term({detail::get_int(term, "p"), detail::get_int(term, "q")}, laurent_from_json(term.at("coeff")));
  }
  return r;
}

inline SkeinElement skein_from_json(const Json& j) {
  detail::expect(j.is_array(), "skein element must be an array");
  SkeinElement r;
  for (const auto& term : j) {
    detail::expect(term.is_object() && term.contains("class") && term.contains("coeff"),
                   "term needs 'class' and 'coeff'");
    const LaurentPoly c = laurent_from_json(term.at("coeff"));
    const auto cls = term.at("class");
    if (cls == "empty") {
      r.add_term(CurveClass::empty(), c);
    } else {
      detail::expect(cls == "curve", "class must be \"empty\" or \"curve\"");
      r.add_curve({detail::get_int(term, "p"), detail::get_int(term, "q")}, c);
    }
  }
  return r;
}

inline SolidTorusElement solid_from_json(const Json& j) {
  detail::expect(j.is_array(), "solid-torus element must be an array of [degree, coefficient] pairs");
  std::vector<LaurentPoly> coeffs;
  for (const auto& term : j) {
    detail::expect(term.is_array() && term.size() == 2 && term[0].is_number_unsigned(),
                   "solid-torus term must be [degree, coefficient]");
    const auto n = term[0].get<std::size_t>();
    if (n >= coeffs.size()) coeffs.resize(n + 1);
    coeffs[n] += laurent_from_json(term[1]);
  }
  return SolidTorusElement(std::move(coeffs));
}

}  // namespace skein::io
