#include <string>

#include "centering.hpp"
#include "dp2/polycore/grading.hpp"

namespace dp2 {

ReembedResult reembed_hypersurface(const FibrationModel& m, const ModelXI& x) {
  ReembedResult out;
  const ScrollWeights& wt = m.weights;
  const long N = wt.N();
  FactorSplit split = factor_split(m);
  out.k2_before = k2_check(wt);

  if (x.index_set.size() != 1) {
    out.reason = "model does not arise from a single-point link (|I| = " + std::to_string(x.index_set.size()) + ")";
    return out;
  }
  const RootClass& root = split.roots.at(static_cast<std::size_t>(x.index_set[0] - 1));
  if (root.kind != RootClass::Kind::rational) {
    out.reason = "blown-up fiber " + root.label() + " is not a rational point";
    return out;
  }
  auto c = detail::centering_for(root);
  MultiPoly eq1 = c.to_centered(x.eq1), eq2 = c.to_centered(x.eq2);
  MultiPoly PI = c.to_centered(x.P_I), Prest = c.to_centered(x.P_rest);
  MultiPoly s = eq1.var("s"), w = eq1.var("w"), u = eq1.var("u"), v = eq1.var("v");
  MultiPoly q = -(eq1 - PI * s + Prest * w);

  // Membership q in <u,v>^N, checked in the centered chart (the ideal is invariant).
  int iu = q.var_index("u"), iv = q.var_index("v");
  out.membership_holds = true;
  for (const auto& [e, coef] : q.terms()) {
    if (e[iu] + e[iv] < N) {
      out.membership_holds = false;
      MultiPoly t(q.vars());
      t.add_term(e, coef);
      out.membership_offenders.push_back(c.from_centered(t).str());
    }
  }
  if (wt.c < 2 * wt.b) {
    out.reason = "c < 2b (c = " + std::to_string(wt.c) + ", 2b = " + std::to_string(2 * wt.b) + ")";
    if (!out.membership_holds) out.reason += "; q is not in <u,v>^" + std::to_string(N);
    return out;
  }
  if (!out.membership_holds) throw std::logic_error("membership fails although c >= 2b");

  Rational lambda = PI.coeff(u.leading_exponent());
  if (PI != u.scaled(lambda)) throw std::logic_error("centered factor is not a multiple of u");
  Exponent evn(model_vars().size(), 0);
  evn[iv] = static_cast<std::uint16_t>(N - 1);
  MultiPoly vn = v.one().times_monomial(evn, Rational(1));
  MultiPoly h = Prest.scaled(lambda.inverse());
  Rational kappa = h.coeff(evn);
  if (kappa.is_zero()) throw PreconditionError("blown-up root is not simple");
  // h = kappa v^(N-1) + u g
  MultiPoly g = h.scaled(kappa.inverse()) - vn;
  {
    MultiPoly gu(g.vars());
    for (const auto& [e, coef] : g.terms()) {
      Exponent f = e;
      --f[iu];
      gu.add_term(f, coef);
    }
    g = gu;
  }
  MultiPoly qn = q.scaled(lambda.inverse()), q1(q.vars()), q2(q.vars());
  for (const auto& [e, coef] : qn.terms()) {
    Exponent f = e;
    if (e[iu] > 0) {
      --f[iu];
      q1.add_term(f, coef);
    } else {
      f[iv] = static_cast<std::uint16_t>(f[iv] - (N - 1));
      q2.add_term(f, coef);
    }
  }

  MultiPoly e1 = eq1.scaled(lambda.inverse()), e2 = eq2.scaled(kappa);
  auto step = [&](const std::map<std::string, MultiPoly>& sub) {
    e1 = e1.substitute(sub);
    e2 = e2.substitute(sub);
  };
  step({{"w", w.scaled(kappa.inverse())}});
  step({{"s", s + g * w}});
  step({{"s", s + q1}, {"w", w - q2}});
  out.first_equation = e1;
  out.first_equation_ok = e1 == u * s - vn * w;

  std::map<std::string, MultiPoly> emb = {{"w", u * w}, {"s", vn * w}};
  out.embedding_ok = e1.substitute(emb).is_zero();
  MultiPoly hyp = c.from_centered(e2.substitute(emb)).embed(scroll_vars());

  out.model.weights = wt;
  out.model.equation = hyp;
  DegreeResult d = weighted_degree(hyp, WeightMatrix::main_scroll(wt).grading());
  out.bidegree_ok = d.homogeneous() && d.degree == Bidegree{wt.ell, 4};
  out.applicable = out.first_equation_ok && out.embedding_ok && out.bidegree_ok;
  if (!out.applicable) out.reason = "coordinate changes did not produce a hypersurface of the expected bidegree";
  out.k2_after = k2_check(out.model.weights);
  return out;
}

}  // namespace dp2
