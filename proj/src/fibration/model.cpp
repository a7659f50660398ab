#include "dp2/fibration/fibration.hpp"
#include "dp2/polycore/grading.hpp"

namespace dp2 {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::pass;
}

Decomposition decompose(const FibrationModel& m) {
  const MultiPoly& e = m.equation;
  if (e.vars() != scroll_vars()) throw MalformedInput("equation must be written over u, v, x, y, z, w");
  const std::size_t iw = 5;
  Decomposition d{MultiPoly(e.vars()), MultiPoly(e.vars()), MultiPoly(e.vars()), false, {}};
  std::vector<std::string> bad;
  for (const auto& [ex, c] : e.terms()) {
    Exponent k = ex;
    k[iw] = 0;
    switch (ex[iw]) {
      case 0: d.r.add_term(k, c); break;
      case 1: d.q.add_term(k, c); break;
      case 2: d.f.add_term(k, c); break;
      default: bad.push_back(term_string(e, ex, c));
    }
  }
  if (!bad.empty()) {
    std::string msg = "terms of w-degree above 2:";
    for (const auto& b : bad) msg += " " + b;
    throw MalformedInput(msg);
  }
  if (d.f.is_zero()) {
    d.degenerate = true;
    d.notes.push_back("f = 0: no w^2 term, so no 1/2(1,1,1) points and the fibration shape is degenerate");
  }
  return d;
}

MultiPoly reassemble(const Decomposition& d) {
  MultiPoly w = MultiPoly::variable(d.f.vars(), "w");
  return d.f * w * w + d.q * w + d.r;
}

const VarList& fiber_vars() {
  static const VarList v = {"x", "y", "z"};
  return v;
}

template <class K>
Poly<K> specialize(const Poly<K>& p, const K& u0, const K& v0) {
  Poly<K> s = p.evaluate(static_cast<std::size_t>(p.require_var("u")), u0)
                  .evaluate(static_cast<std::size_t>(p.require_var("v")), v0);
  return s.embed(fiber_vars());
}

template Poly<Rational> specialize(const Poly<Rational>&, const Rational&, const Rational&);
template Poly<Fp> specialize(const Poly<Fp>&, const Fp&, const Fp&);

}  // namespace dp2
