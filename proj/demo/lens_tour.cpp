// Walks through the main computations: products of torus curves, their
// images in the solid torus, a lens-space reduction and a Jones-Wenzl
// expansion.

#include <iostream>

#include "skein/skein.hpp"

int main() {
  using namespace skein;
  using io::to_text;

  const SkeinElement meridian = curve_class(0, 1);
  const SkeinElement longitude = curve_class(1, 0);
  std::cout << "(1,0) * (0,1)       = " << to_text(longitude * meridian) << '\n';
  std::cout << "embedded            = " << to_text(embed(longitude * meridian)) << '\n';
  std::cout << "in the solid torus  = " << to_text(project(longitude * meridian)) << '\n';

  // L(5,2): the meridian of the first torus is glued to (5,2).
  LensReducer lens(GluingMatrix{2, 1, 5, 2});
  const GluingMatrix& g = lens.matrix();
  std::cout << "L(5,2) normalized   = (" << g.a << "," << g.b << "," << g.p << "," << g.q << ")\n";
  for (unsigned n = 0; n <= 5; ++n) std::cout << "  a^" << n << " -> " << to_text(lens.reduce_monomial(n)) << '\n';

  std::cout << "(3,3)_JW            = " << to_text(jw_expand(3, 1, 1)) << '\n';
  std::cout << "trace f^(2) at r=4  = " << jw_trace_at_root(2, 4) << '\n';
}
