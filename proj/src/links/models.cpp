#include <omp.h>

#include <algorithm>
#include <set>

#include "centering.hpp"
#include "dp2/polycore/grading.hpp"
#include "dp2/polycore/resultant.hpp"

namespace dp2 {

namespace detail {

static MultiPoly lin(const MultiPoly& p, const Rational& cu, const Rational& cv) {
  return p.var("u").scaled(cu) + p.var("v").scaled(cv);
}

MultiPoly Centering::to_centered(const MultiPoly& p) const {
  // old u = beta u' + u0 v', old v = -alpha u' + v0 v'
  return p.substitute({{"u", lin(p, beta, u0)}, {"v", lin(p, -alpha, v0)}});
}

MultiPoly Centering::from_centered(const MultiPoly& p) const {
  return p.substitute({{"u", lin(p, v0, -u0)}, {"v", lin(p, alpha, beta)}});
}

Centering centering_for(const RootClass& root) {
  if (root.kind != RootClass::Kind::rational) throw PreconditionError("centering needs a rational root");
  mpz_class g, s, t;
  // s * v0 + t * u0 = 1, so beta = s and alpha = t.
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), root.v0.get_mpz_t(), root.u0.get_mpz_t());
  if (g != 1) throw std::logic_error("root point is not primitive");
  return Centering{Rational(root.u0), Rational(root.v0), Rational(t), Rational(s)};
}

}  // namespace detail

const VarList& model_vars() {
  static const VarList v = {"u", "v", "x", "y", "z", "w", "s"};
  return v;
}

FactorSplit factor_split(const FibrationModel& m) {
  FiberInventory inv = singular_fibers(m);
  if (!inv.squarefree) throw PreconditionError("f has a repeated root: quasi-smoothness is violated");
  Decomposition d = decompose(m);
  FactorSplit split;
  MultiPoly prod = d.f.one();
  for (const auto& fb : inv.fibers) {
    split.factors.push_back(fb.root.form);
    split.degrees.push_back(fb.root.degree);
    split.roots.push_back(fb.root);
    prod = prod * fb.root.form;
  }
  Rational kappa = d.f.leading_coeff() / prod.leading_coeff();
  if (!(prod.scaled(kappa) == d.f)) throw std::logic_error("root forms do not multiply back to f");
  if (split.factors.empty()) {
    split.factors.push_back(d.f);  // constant f: kept as a degree-0 unit, never indexed
    split.degrees.push_back(0);
  } else {
    split.factors[0] = split.factors[0].scaled(kappa);
  }
  return split;
}

namespace {

std::size_t indexable(const FactorSplit& s) { return s.degrees.size() == 1 && s.degrees[0] == 0 ? 0 : s.factors.size(); }

MultiPoly in_model_ring(const MultiPoly& p) { return p.embed(model_vars()); }

}  // namespace

ModelXI build_model(const FibrationModel& m, const FactorSplit& split, std::vector<int> index_set) {
  std::sort(index_set.begin(), index_set.end());
  std::size_t K = indexable(split);
  for (std::size_t i = 0; i < index_set.size(); ++i) {
    if (index_set[i] < 1 || static_cast<std::size_t>(index_set[i]) > K)
      throw PreconditionError("index " + std::to_string(index_set[i]) + " does not name a root of f (there are " +
                              std::to_string(K) + ")");
    if (i && index_set[i] == index_set[i - 1]) throw PreconditionError("index set repeats " + std::to_string(index_set[i]));
  }
  Decomposition d = decompose(m);
  ModelXI x;
  x.index_set = index_set;
  x.weights = m.weights;
  MultiPoly one = MultiPoly::from_int(model_vars(), 1);
  x.P_I = one;
  x.P_rest = one;
  for (std::size_t i = 0; i < split.factors.size(); ++i) {
    bool in = std::binary_search(index_set.begin(), index_set.end(), static_cast<int>(i + 1));
    MultiPoly fac = in_model_ring(split.factors[i]);
    if (in) {
      x.P_I = x.P_I * fac;
      x.k += split.degrees[i];
    } else {
      x.P_rest = x.P_rest * fac;
    }
  }
  MultiPoly s = one.var("s"), w = one.var("w");
  x.eq1 = x.P_I * s - x.P_rest * w - in_model_ring(d.q);
  x.eq2 = s * w + in_model_ring(d.r);
  x.ambient = WeightMatrix::enlarged(m.weights, x.k);
  Grading g = x.ambient.grading();
  DegreeResult d1 = weighted_degree(x.eq1, g), d2 = weighted_degree(x.eq2, g);
  x.eq1_homogeneous = d1.homogeneous() && d1.degree == Bidegree{m.weights.c + m.weights.N(), 2};
  x.eq2_homogeneous = d2.homogeneous() && d2.degree == Bidegree{m.weights.ell, 4};
  return x;
}

ModelXI build_model(const FibrationModel& m, std::vector<int> index_set) {
  return build_model(m, factor_split(m), std::move(index_set));
}

static std::vector<int> subset(unsigned long mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1ul) out.push_back(i + 1);
  return out;
}

std::vector<ModelXI> all_models_serial(const FibrationModel& m) {
  FactorSplit split = factor_split(m);
  std::size_t K = indexable(split);
  if (K > 20) throw PreconditionError("refusing to enumerate 2^" + std::to_string(K) + " models");
  std::vector<ModelXI> out;
  for (unsigned long mask = 0; mask < (1ul << K); ++mask) out.push_back(build_model(m, split, subset(mask)));
  return out;
}

std::vector<ModelXI> all_models(const FibrationModel& m) {
  FactorSplit split = factor_split(m);
  std::size_t K = indexable(split);
  if (K > 20) throw PreconditionError("refusing to enumerate 2^" + std::to_string(K) + " models");
  const long count = 1l << K;
  std::vector<ModelXI> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 4)
  for (long mask = 0; mask < count; ++mask) out[mask] = build_model(m, split, subset(static_cast<unsigned long>(mask)));
  return out;
}

bool same_model(const ModelXI& a, const ModelXI& b) {
  return a.index_set == b.index_set && a.ambient == b.ambient && a.eq1.monic() == b.eq1.monic() &&
         a.eq2.monic() == b.eq2.monic();
}

LinkStep link_at(const FibrationModel& m, const FactorSplit& split, const ModelXI& from, int j) {
  LinkStep st;
  st.from = from;
  st.factor = j;
  std::vector<int> to = from.index_set;
  auto it = std::find(to.begin(), to.end(), j);
  bool adding = it == to.end();
  if (adding) {
    to.push_back(j);
  } else {
    to.erase(it);
  }
  st.to = build_model(m, split, to);
  MultiPoly l = in_model_ring(split.factors.at(static_cast<std::size_t>(j - 1)));
  MultiPoly one = l.one(), s = l.var("s"), w = l.var("w");
  // New coordinates in terms of old ones.
  if (adding) {
    st.change.substitution.emplace("s", RationalExpr{s, l});
    st.change.substitution.emplace("w", RationalExpr{l * w, one});
  } else {
    st.change.substitution.emplace("s", RationalExpr{l * s, one});
    st.change.substitution.emplace("w", RationalExpr{w, l});
  }
  RationalExpr e1 = substitute_rational(st.to.eq1, st.change.substitution);
  RationalExpr e2 = substitute_rational(st.to.eq2, st.change.substitution);
  st.eq1_certified = (e1.num - from.eq1 * e1.den).is_zero();
  st.eq2_certified = (e2.num - from.eq2 * e2.den).is_zero();
  return st;
}

FiberLink fiber_link(const FibrationModel& m, int i, const GeneralityOptions* generality) {
  FactorSplit split = factor_split(m);
  if (i < 1 || static_cast<std::size_t>(i) > indexable(split))
    throw PreconditionError("fiber index " + std::to_string(i) + " out of range");
  Decomposition d = decompose(m);
  FiberLink out;
  const RootClass& root = split.roots.at(static_cast<std::size_t>(i - 1));
  if (generality) {
    FiberInventory inv = singular_fibers(m);
    out.generality = generality_check(inv.fibers.at(static_cast<std::size_t>(i - 1)), d, *generality);
    if (out.generality->overall != Status::pass)
      throw PreconditionError("generality fails on fiber " + root.label() + ": the flopped lines are not distinct");
  }
  out.step = link_at(m, split, build_model(m, split, {}), i);

  MultiPoly q = d.q, r = d.r;
  bool centered = root.kind == RootClass::Kind::rational;
  if (centered) {
    auto c = detail::centering_for(root);
    q = c.to_centered(q);
    r = c.to_centered(r);
  }
  VarList L = {"u", "x", "y", "z", "w", "t", "ubar"};
  auto local = [&](const MultiPoly& p) {
    MultiPoly p1 = p;
    if (int iv = p.var_index("v"); iv >= 0) p1 = p.evaluate(static_cast<std::size_t>(iv), Rational(1));
    VarList tmp = {"u", "v", "x", "y", "z", "w", "t", "ubar"};
    MultiPoly p2 = p1.embed(tmp);
    if (centered) p2 = p2.substitute({{"u", MultiPoly::variable(tmp, "ubar")}});
    return p2.embed(L);
  };
  MultiPoly ql = local(q), rl = local(r);
  MultiPoly ub = MultiPoly::variable(L, "ubar"), t = MultiPoly::variable(L, "t"), w = MultiPoly::variable(L, "w");
  auto& ec = out.elimination;
  ec.derived = ub * t * t - ql * t + rl;
  ec.via_substitution = (w * t + rl).substitute({{"w", ub * t - ql}});
  ec.via_resultant = resultant_elim(ub * t - w - ql, w * t + rl, "w");
  ec.holds = ec.via_substitution == ec.derived && ec.via_resultant == -ec.derived;
  ec.printed_residual = ec.derived - (ub * t * t - ql * w + rl);
  return out;
}

HypersurfaceElimination eliminate_to_hypersurface(const FibrationModel& m, const ModelXI& x) {
  Decomposition d = decompose(m);
  FactorSplit split = factor_split(m);
  std::size_t K = indexable(split);
  HypersurfaceElimination out;
  MultiPoly s = x.eq1.var("s"), w = x.eq1.var("w");
  MultiPoly expected;
  MultiPoly W = MultiPoly::variable(scroll_vars(), "w");
  if (x.index_set.empty()) {
    // eq1 = s - P_rest w - q
    MultiPoly sval = s - x.eq1;
    out.equation = x.eq2.substitute({{"s", sval}}).embed(scroll_vars());
    expected = d.f * W * W + d.q * W + d.r;
  } else if (x.index_set.size() == K) {
    // eq1 = P_I s - w - q with P_rest = 1
    if (!x.P_rest.is_constant() || !x.P_rest.constant_term().is_one())
      throw std::logic_error("full index set should leave P_rest = 1");
    MultiPoly wval = w + x.eq1;
    MultiPoly e = x.eq2.substitute({{"w", wval}});
    out.equation = e.substitute({{"s", w}}).embed(scroll_vars());
    expected = d.f * W * W - d.q * W + d.r;
  } else {
    throw PreconditionError("elimination to a hypersurface is defined for the empty and the full index set");
  }
  DegreeResult dg = weighted_degree(out.equation, WeightMatrix::main_scroll(m.weights).grading());
  out.bidegree_ok = dg.homogeneous() && dg.degree == Bidegree{m.weights.ell, 4};
  out.matches = out.equation == expected;
  return out;
}

}  // namespace dp2
