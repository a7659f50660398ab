#include "dp2/intersect/intersect.hpp"

namespace dp2 {

EnlargedTable enlarged_table(const ScrollWeights& w, long k) {
  EnlargedTable t;
  t.weights = w;
  t.k = k;
  t.M4F = Rational(1, 4);
  t.M5 = (Rational(-w.a - w.b) - Rational(w.ell, 2)) / Rational(4);
  // x.y.z.w.s = 0: M (M + aF)(M + bF)(2M + c1 F)(2M + c2 F) = 4 M^5 + (4a + 4b + 2c1 + 2c2) M^4 F.
  long c1 = w.c + k, c2 = w.c + w.N() - k;
  t.M5_from_relation = -Rational(4 * w.a + 4 * w.b + 2 * c1 + 2 * c2) * t.M4F / Rational(4);
  t.eq1 = {2, w.c + w.N()};
  t.eq2 = {4, w.ell};
  return t;
}

Rational five_fold(const EnlargedTable& t, const std::array<DivisorClass, 5>& d) {
  Rational m5(1), m4f(0);
  for (const auto& x : d) {
    m4f = m4f * Rational(x.m) + m5 * Rational(x.f);
    m5 *= Rational(x.m);
  }
  return m5 * t.M5_from_relation + m4f * t.M4F;
}

Rational triple_product_on_XI(const EnlargedTable& t, const DivisorClass& d1, const DivisorClass& d2,
                              const DivisorClass& d3) {
  return five_fold(t, {d1, d2, d3, t.eq1, t.eq2});
}

}  // namespace dp2
