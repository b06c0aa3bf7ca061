// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion is checked exactly and against its time
// limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "skein/skein.hpp"
#include "skein_cli.hpp"
#include "support/generators.hpp"

namespace {

using namespace skein;
using skein::testing::Gen;
using skein::testing::t;

/// Outcome of a criterion body; `detail` explains the first failure.
struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string str(const Winding& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

SkeinElement T(std::int64_t p, std::int64_t q, LaurentPoly c = LaurentPoly(1)) { return curve_class(p, q, c); }

Check morphism() {
  Check c;
  Gen g(1001);
  for (int i = 0; i < 1000 && c.ok; ++i) {
    const Winding u = g.winding(20), v = g.winding(20);
    const SkeinElement a = T(u.p, u.q), b = T(v.p, v.q);
    c.require(embed(a * b) == embed(a) * embed(b), "embedding not multiplicative on " + str(u) + " x " + str(v));
  }
  return c;
}

Check chebyshev_shadow() {
  Check c;
  for (unsigned m = 0; m <= 50; ++m)
    for (unsigned n = 0; n <= 50; ++n) {
      const unsigned diff = m > n ? m - n : n - m;
      c.require(chebyshev_T(m) * chebyshev_T(n) == chebyshev_T(m + n) + chebyshev_T(diff),
                "T_" + std::to_string(m) + " T_" + std::to_string(n));
    }
  for (unsigned n = 1; n <= 60; ++n) {
    IntPolynomial sum;
    for (const auto& [k, coeff] : power_to_chebyshev(n)) sum += coeff * chebyshev_T(k);
    c.require(sum == IntPolynomial::x_power(n), "power round trip at n = " + std::to_string(n));
  }
  return c;
}

double classical_value(const SkeinElement& a, double x, double y) {
  double sum = 0.0;
  for (const auto& [cls, coeff] : a.terms()) {
    const double k = coeff.value_at_one().convert_to<double>();
    sum += cls.is_empty() ? k : k * 2.0 * std::cos(2.0 * std::numbers::pi * (cls.p() * x + cls.q() * y));
  }
  return sum;
}

Check trig_oracle() {
  Check c;
  Gen g(1003);
  for (int i = 0; i < 200 && c.ok; ++i) {
    const SkeinElement a = g.skein(3, 10), b = g.skein(3, 10);
    const SkeinElement ab = a * b;
    for (int j = 0; j < 50; ++j) {
      const double x = g.real(0.0, 1.0), y = g.real(0.0, 1.0);
      const double expected = classical_value(a, x, y) * classical_value(b, x, y);
      const double got = classical_value(ab, x, y);
      c.require(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)),
                "product " + std::to_string(i) + " off by " + std::to_string(got - expected));
    }
  }
  return c;
}

Check solid_torus_module() {
  Check c;
  Gen g(1004);
  for (int i = 0; i < 500 && c.ok; ++i) {
    const SkeinElement a = g.skein(3, 7), b = g.skein(3, 7);
    c.require(project(a * b) == act(a, project(b)), "pi(AB) != A.pi(B) at pair " + std::to_string(i));
  }
  int non_units = 0, non_units_off_axis = 0;
  std::string first_non_unit;
  for (std::int64_t p = -30; p <= 30; ++p)
    for (std::int64_t q = -10; q <= 10; ++q) {
      const SolidTorusElement x = curve_image(p, q);
      c.require(x.degree() == std::abs(p), "degree of x_" + str({p, q}));
      if (!x.leading_coefficient().is_unit()) {
        if (non_units++ == 0) first_non_unit = "x_" + str({p, q}) + " = " + x.leading_coefficient().to_string();
        if (p != 0) ++non_units_off_axis;
      }
    }
  c.require(non_units == 0, std::to_string(non_units) + " of 1281 x_{p,q} have a non-unit leading coefficient, " +
                                std::to_string(non_units - non_units_off_axis) + " of them with p = 0 (first: " +
                                first_non_unit + "); x_{0,q} is the scalar (-t^2)^q + (-t^-2)^q");
  c.require(project(T(0, 1) + SkeinElement::scalar(t(2) + t(-2))).is_zero(), "(0,1)+t^2+t^-2 not in the kernel");
  c.require(project(T(1, 1) + T(1, 0, t(-3))).is_zero(), "(1,1)+t^-3(1,0) not in the kernel");
  return c;
}

Check corrected_action() {
  Check c;
  for (unsigned n = 1; n <= 20; ++n)
    c.require(act(T(1, 0), SolidTorusElement::alpha_chebyshev(n)) ==
                  SolidTorusElement::alpha_chebyshev(n + 1) + SolidTorusElement::alpha_chebyshev(n - 1),
              "(1,0).alpha_" + std::to_string(n));
  return c;
}

LensElement scalar_lens(std::size_t size, LaurentPoly c) {
  std::vector<LaurentPoly> v(size);
  v[0] = std::move(c);
  return LensElement(std::move(v));
}

Check lens_suite() {
  Check c;
  {
    LensReducer sphere(GluingMatrix{0, 1, 1, 0});
    c.require(sphere.reduce_monomial(1) == scalar_lens(1, loop_value()), "S^3: alpha");
    c.require(sphere.reduce_monomial(2) == scalar_lens(1, loop_value() * loop_value()), "S^3: alpha^2");
    for (unsigned n = 0; n <= 12; ++n) c.require(sphere.reduce_monomial(n).size() == 1, "S^3: not scalar");
  }
  Gen g(1006);
  for (std::int64_t p = 2; p <= 8; ++p) {
    LensReducer r(GluingMatrix{-1, 0, p, 1});
    const GluingMatrix& m = r.matrix();
    const std::string where = "L(" + std::to_string(p) + ",1)";
    for (unsigned n = 0; n <= 3 * p; ++n) {
      const LensElement v = r.reduce_monomial(n);
      c.require(v.size() == static_cast<std::size_t>(p / 2 + 1) && v.top_index() <= p / 2, where + ": index bound");
      c.require(r.reduce(v.as_solid_torus()) == v, where + ": not idempotent at n = " + std::to_string(n));
      std::int64_t m0 = 0;
      while ((static_cast<std::int64_t>(n) - m0 * m.a) % m.p != 0) ++m0;
      for (std::int64_t mm = m0 + p; mm <= m0 + 2 * p; mm += p)
        c.require(r.reduce_monomial_via(n, mm) == v, where + ": decomposition dependence at n = " + std::to_string(n));
    }
    for (int i = 0; i < 4; ++i) {
      const SolidTorusElement u = g.solid(4);
      const LensElement base = r.reduce(act(T(m.a, m.b), u));
      for (std::int64_t k = -3; k <= 3; ++k) {
        const Winding w = m.apply(1, k);
        c.require(r.reduce(act(T(w.p, w.q), u)) == twist_constant(m, k) * base,
                  where + ": twist identity at k = " + std::to_string(k));
      }
    }
  }
  return c;
}

Check jones_wenzl_suite() {
  Check c;
  const Winding curves[] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 2}};
  for (const Winding w : curves)
    for (unsigned n = 0; n <= 12; ++n) {
      const SkeinElement e = jw_expand(n, w.p, w.q);
      c.require(e == jw_via_recurrence(n, w.p, w.q), "expand != recurrence at n = " + std::to_string(n));
      NTElement telescoped;
      for (std::int64_t k = n; k >= -static_cast<std::int64_t>(n); k -= 2)
        telescoped = telescoped + NTElement::basis(k * w.p, k * w.q);
      c.require(embed(e) == telescoped, "embedding does not telescope at n = " + std::to_string(n));
      c.require(jw_trace_via_expansion(n, w.p, w.q) == delta(n), "trace at n = " + std::to_string(n));
    }
  const Complex v = jw_trace(2).evaluate(root_of_unity(4));
  c.require(std::abs(v - Complex(1.0, 0.0)) <= 1e-9, "trace of f^(2) at r = 4");
  return c;
}

Check cli_contract() {
  using namespace skein::io;
  Check c;
  Gen g(1008);
  for (int i = 0; i < 200; ++i) {
    const SkeinElement a = g.skein(static_cast<int>(g.integer(0, 5)), 15) + SkeinElement::scalar(g.laurent());
    const NTElement n = g.nc(static_cast<int>(g.integer(0, 5)), 15);
    const SolidTorusElement u = g.solid(10);
    c.require(parse_skein(to_text(a)) == a, "skein text round trip: " + to_text(a));
    c.require(parse_nc(to_text(n)) == n, "nc text round trip: " + to_text(n));
    c.require(parse_solid(to_text(u)) == u, "solid text round trip: " + to_text(u));
    c.require(to_text(a) == to_text(parse_skein(to_text(a))), "skein text not deterministic");
  }
  const std::pair<std::vector<std::string>, int> malformed[] = {
      {{"eval", "T(1,0"}, cli::kExitParse},
      {{"eval", "T(1,0) + e(0,1)"}, cli::kExitParse},
      {{"eval", "--kind", "solid", "[[0, 1"}, cli::kExitParse},
      {{"bogus"}, cli::kExitParse},
      {{"unembed", "e(1,0)"}, cli::kExitDomain},
      {{"eval", "P(2;2,4)"}, cli::kExitDomain},
      {{"lens", "--matrix", "3,1,2,1", "reduce", "a(1)"}, cli::kExitDomain},
      {{"jw-expand", "4", "1", "0", "--eval-at", "4"}, cli::kExitDomain},
      {{"eval", "T(1,0)*T(0,1)"}, cli::kExitOk},
  };
  for (const auto& [args, expected] : malformed) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    c.require(code == expected, "exit " + std::to_string(code) + " for '" + args.back() + "', expected " +
                                    std::to_string(expected));
  }
  return c;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Check()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 morphism: embed(A*B) = embed(A)*embed(B), 1000 basis pairs", 5.0, morphism},
      {"AC2 chebyshev: T_m T_n = T_{m+n} + T_|m-n|, power round trip", 2.0, chebyshev_shadow},
      {"AC3 trig oracle at t = 1, 200 products x 50 points", 2.0, trig_oracle},
      {"AC4 solid torus: module map, degree/unit law, ideal generators", 5.0, solid_torus_module},
      {"AC5 corrected action: (1,0).alpha_n = alpha_{n+1} + alpha_{n-1}", 1.0, corrected_action},
      {"AC6 lens spaces: S^3 values, L(p,1) bound/idempotence/decomposition/twist", 30.0, lens_suite},
      {"AC7 Jones-Wenzl: expansion, telescoping, traces, r = 4 value", 2.0, jones_wenzl_suite},
      {"AC8 CLI: round trips and exit codes", 2.0, cli_contract},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criterion.body();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && seconds >= criterion.limit_seconds) {
      c.ok = false;
      c.detail = "time limit exceeded";
    }
    std::printf("%s  %s  (%.3f s, limit %.0f s)%s%s\n", c.ok ? "PASS" : "FAIL", criterion.name, seconds,
                criterion.limit_seconds, c.ok ? "" : ": ", c.detail.c_str());
    if (!c.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
