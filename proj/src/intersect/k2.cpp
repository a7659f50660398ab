#include <algorithm>

#include "dp2/intersect/intersect.hpp"

namespace dp2 {

std::string to_string(K2Verdict v) {
  switch (v) {
    case K2Verdict::satisfied: return "satisfied";
    case K2Verdict::boundary: return "boundary";
    case K2Verdict::violated: return "violated";
  }
  return "?";
}

K2Report k2_check(const ScrollWeights& w) {
  K2Report r;
  r.weights = w;
  long mx = std::max(2 * w.b, w.c);
  r.canonical = canonical_class(w);
  r.nef_class = {2, mx};
  IntersectionTable t = intersection_table(w);
  r.value = triple_product(t, r.canonical, r.canonical, r.nef_class);
  r.closed_form = Rational(16 + 4 * w.a + 4 * w.b + 6 * w.c + 2 * mx - 7 * w.ell);
  r.sufficient_lhs = Rational(7 * w.ell, 2);
  r.sufficient_rhs = Rational(2 * w.a + 2 * w.b + 3 * w.c + 8 + mx);
  r.routes_agree = r.value == r.closed_form && r.value == Rational(2) * (r.sufficient_rhs - r.sufficient_lhs);
  if (r.value.sign() < 0) {
    r.verdict = K2Verdict::satisfied;
  } else if (r.value.is_zero()) {
    r.verdict = K2Verdict::boundary;
    r.notes.push_back(
        "value is exactly zero: the non-positivity threshold accepts it, the strict sufficient inequality 7l/2 > "
        "2a + 2b + 3c + 8 + max(2b, c) does not");
  } else {
    r.verdict = K2Verdict::violated;
  }
  r.c_negative = w.c < 0;
  if (r.c_negative) r.notes.push_back("c < 0: the effective cone description used for the nef witness assumes c >= 0");
  r.N = w.N();
  if (r.N >= 0) {
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), 2, static_cast<unsigned long>(r.N));
    r.model_count = count.get_str();
  } else {
    r.model_count = "0";
    r.notes.push_back("N = l - 2c < 0: no equation of this bidegree has a w^2 term");
  }
  if (!r.routes_agree) r.notes.push_back("direct pairing disagrees with the closed form");
  return r;
}

}  // namespace dp2
