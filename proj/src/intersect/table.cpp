#include "dp2/intersect/intersect.hpp"

namespace dp2 {

IntersectionTable intersection_table(const ScrollWeights& w) {
  IntersectionTable t;
  t.weights = w;
  t.M3 = Rational(w.ell, 2) - Rational(2 * w.a + 2 * w.b + w.c);
  t.M2F = Rational(2);
  t.MF2 = Rational(0);
  t.F3 = Rational(0);
  return t;
}

Rational triple_product(const IntersectionTable& t, const DivisorClass& d1, const DivisorClass& d2,
                        const DivisorClass& d3) {
  Rational ppp = Rational(d1.m) * Rational(d2.m) * Rational(d3.m);
  Rational ppq = Rational(d1.m * d2.m) * Rational(d3.f) + Rational(d1.m * d2.f) * Rational(d3.m) +
                 Rational(d1.f * d2.m) * Rational(d3.m);
  return ppp * t.M3 + ppq * t.M2F;
}

ToricTable toric_table(const ScrollWeights& w) {
  ToricTable t;
  t.M3F = Rational(1, 2);
  // x.y.z.w = 0: M (M + aF)(M + bF)(2M + cF) = 2 M^4 + (2a + 2b + c) M^3 F.
  t.M4 = -Rational(2 * w.a + 2 * w.b + w.c) * t.M3F / Rational(2);
  return t;
}

Rational triple_product_on_T(const ToricTable& t, const ScrollWeights& w, const DivisorClass& d1,
                             const DivisorClass& d2, const DivisorClass& d3) {
  const DivisorClass ds[4] = {d1, d2, d3, DivisorClass{4, w.ell}};
  Rational m4(1), m3f(0);
  for (const auto& d : ds) {
    m3f = m3f * Rational(d.m) + m4 * Rational(d.f);
    m4 *= Rational(d.m);
  }
  return m4 * t.M4 + m3f * t.M3F;
}

}  // namespace dp2
