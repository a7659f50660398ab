#include <algorithm>

#include "dp2/fibration/fibration.hpp"
#include "dp2/polycore/univariate.hpp"

namespace dp2 {

std::string RootClass::label() const {
  if (kind == Kind::rational) return "(" + u0.get_str() + ":" + v0.get_str() + ")";
  return "factor " + form.str();
}

namespace {

MultiPoly homogenize(const UPoly<Rational>& h, int degree, const VarList& vars) {
  MultiPoly out(vars);
  for (int i = 0; i <= h.degree(); ++i) {
    Exponent e(vars.size(), 0);
    e[0] = static_cast<std::uint16_t>(i);
    e[1] = static_cast<std::uint16_t>(degree - i);
    out.add_term(e, h.c[i]);
  }
  return primitive_part(out);
}

}  // namespace

FiberInventory singular_fibers(const FibrationModel& m) {
  Decomposition d = decompose(m);
  if (d.f.is_zero()) throw MalformedInput("f = 0: there are no singular fibers to enumerate");
  const MultiPoly& f = d.f;
  for (std::size_t i = 2; i < f.nvars(); ++i)
    if (f.degree_in(i) > 0) throw MalformedInput("coefficient of w^2 involves " + f.vars()[i]);
  FiberInventory inv;
  inv.N = f.total_degree();
  for (const auto& [e, c] : f.terms())
    if (static_cast<long>(total_degree(e)) != inv.N) throw MalformedInput("coefficient of w^2 is not a binary form");
  if (inv.N != m.weights.N())
    inv.notes.push_back("deg f = " + std::to_string(inv.N) + " differs from l - 2c = " + std::to_string(m.weights.N()));

  std::vector<RootClass> rational, factors;
  long kv = inv.N;
  for (const auto& [e, c] : f.terms()) kv = std::min<long>(kv, e[1]);
  if (kv > 0) {
    RootClass r;
    r.u0 = 1;
    r.v0 = 0;
    r.form = MultiPoly::variable(f.vars(), "v");
    r.multiplicity = static_cast<int>(kv);
    rational.push_back(r);
  }
  UPoly<Rational> g = to_univariate(f.evaluate(1, Rational(1)), 0);
  auto levels = squarefree_decomposition(g);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    UPoly<Rational> h = levels[j];
    if (h.degree() <= 0) continue;
    for (const auto& t : rational_roots(h)) {
      RootClass r;
      r.u0 = t.num();
      r.v0 = t.den();
      if (r.u0 == 0) r.v0 = 1;
      r.form = primitive_part(MultiPoly::constant(f.vars(), Rational(r.v0)) * MultiPoly::variable(f.vars(), "u") -
                              MultiPoly::constant(f.vars(), Rational(r.u0)) * MultiPoly::variable(f.vars(), "v"));
      r.multiplicity = static_cast<int>(j + 1);
      rational.push_back(r);
      UPoly<Rational> lin{{-t, Rational(1)}, FieldTag{}};
      h = exact_div(h, lin);
    }
    if (h.degree() > 0) {
      RootClass r;
      r.kind = RootClass::Kind::factor;
      r.degree = h.degree();
      r.form = homogenize(h, h.degree(), f.vars());
      r.multiplicity = static_cast<int>(j + 1);
      factors.push_back(r);
    }
  }
  for (auto& r : rational)
    if (r.u0 < 0 || (r.u0 == 0 && r.v0 < 0)) {
      r.u0 = -r.u0;
      r.v0 = -r.v0;
    }
  std::sort(rational.begin(), rational.end(), [](const RootClass& x, const RootClass& y) {
    if (x.u0 != y.u0) return x.u0 < y.u0;
    return x.v0 < y.v0;
  });
  for (const auto* list : {&rational, &factors})
    for (const auto& r : *list) {
      SingularFiber s;
      s.root = r;
      if (r.multiplicity > 1) inv.squarefree = false;
      if (r.kind == RootClass::Kind::rational) {
        Rational u0(r.u0), v0(r.v0);
        s.q_bar = specialize(d.q, u0, v0);
        s.r_bar = specialize(d.r, u0, v0);
        s.specialized = true;
      } else {
        inv.notes.push_back("roots of " + r.form.str() +
                            " are not rational; checks run over prime fields where it splits");
      }
      inv.fibers.push_back(std::move(s));
    }
  if (!inv.squarefree) inv.notes.push_back("f has a repeated root: quasi-smoothness is violated");
  return inv;
}

}  // namespace dp2
