#include <map>

#include "dp2/fibration/fibration.hpp"
#include "dp2/polycore/random.hpp"
#include "dp2/polycore/resultant.hpp"
#include "dp2/polycore/univariate.hpp"

namespace dp2 {

template <class K>
K quadric_det(const Poly<K>& q) {
  FieldTag f = q.field();
  K half = FieldOps<K>::inverse(FieldOps<K>::from_int(2, f));
  Poly<K> qq = q.embed(fiber_vars());
  auto coeff = [&](int i, int j) {
    Exponent e(3, 0);
    ++e[i];
    ++e[j];
    K c = qq.coeff(e);
    return i == j ? c : c * half;
  };
  K m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = coeff(i, j);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template Rational quadric_det(const Poly<Rational>&);
template Fp quadric_det(const Poly<Fp>&);

namespace {

Triviality field_triviality(const std::vector<Poly<Rational>>& gens, const GroebnerOptions& opts, bool& prob,
                            std::string& note) {
  TrivialityReport r = ideal_triviality(gens, opts);
  prob = r.probabilistic;
  note = r.note;
  return r.verdict;
}

Triviality field_triviality(const std::vector<Poly<Fp>>& gens, const GroebnerOptions& opts, bool& prob,
                            std::string& note) {
  prob = false;
  auto r = groebner_basis(gens, opts.step_budget);
  if (r.verdict == Triviality::inconclusive) note = "step budget exhausted";
  return r.verdict;
}

template <class K>
std::array<long, 9> random_change(Rng& rng, FieldTag field) {
  for (;;) {
    std::array<long, 9> a;
    for (auto& x : a) x = rng.uniform(-3, 3);
    long det = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    if (det != 0 && (field.is_rational() || det % static_cast<long>(field.prime) != 0)) return a;
  }
}

template <class K>
Poly<K> apply_change(const Poly<K>& p, const std::array<long, 9>& a) {
  FieldTag f = p.field();
  std::map<std::string, Poly<K>> sub;
  const auto& vars = fiber_vars();
  for (int i = 0; i < 3; ++i) {
    Poly<K> img(vars, f);
    for (int j = 0; j < 3; ++j)
      img += Poly<K>::variable(vars, vars[j], f).scaled(FieldOps<K>::from_int(a[3 * i + j], f));
    sub.emplace(vars[i], img);
  }
  return p.substitute(sub);
}

template <class K>
bool is_form(const Poly<K>& p, int degree) {
  for (const auto& [e, c] : p.terms())
    if (static_cast<int>(total_degree(e)) != degree) return false;
  return true;
}

}  // namespace

template <class K>
GeneralityReport generality_forms(const Poly<K>& q_in, const Poly<K>& r_in, const GeneralityOptions& opts,
                                  std::uint64_t seed) {
  GeneralityReport rep;
  FieldTag field = q_in.field();
  rep.fields.push_back(field.str());
  Poly<K> q = q_in.embed(fiber_vars());
  Poly<K> r = r_in.embed(fiber_vars());
  if (q.is_zero()) {
    rep.g1 = rep.g2 = rep.g3 = {Status::fail, "q = 0 on this fiber"};
    rep.overall = Status::fail;
    rep.witnesses.push_back("q vanishes identically");
    return rep;
  }
  if (!is_form(q, 2) || !is_form(r, 4)) throw MalformedInput("fiber forms must have degrees 2 and 4");

  K det = quadric_det(q);
  if (FieldOps<K>::is_zero(det)) {
    rep.g1 = {Status::fail, "quadric has rank below 3"};
    rep.witnesses.push_back("Gram determinant of q vanishes");
  } else {
    rep.g1 = {Status::pass, "Gram determinant " + FieldOps<K>::str(det)};
  }

  Rng rng(seed);
  const std::size_t iz = 2;
  rep.g2 = {Status::fail, "every projection tried gave a repeated root"};
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::array<long, 9> a = attempt == 0 ? std::array<long, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1} : random_change<K>(rng, field);
    rep.coordinate_changes.push_back(a);
    rep.attempts = attempt + 1;
    Poly<K> q2 = apply_change(q, a);
    Poly<K> r2 = apply_change(r, a);
    if (q2.degree_in(iz) < 2 || r2.degree_in(iz) < 4) continue;
    Poly<K> res = resultant_elim(q2, r2, "z");
    rep.resultant = res.str();
    if (res.is_zero()) {
      rep.g2 = {Status::fail, "resultant vanishes identically: q and r share a component"};
      rep.witnesses.push_back("q and r have a common factor");
      rep.resultant_degree = -1;
      break;
    }
    rep.resultant_degree = res.total_degree();
    if (squarefree(res).squarefree) {
      if (rep.resultant_degree != 8) {
        rep.g2 = {Status::fail, "squarefree resultant of degree " + std::to_string(rep.resultant_degree)};
      } else {
        rep.g2 = {Status::pass, "8 distinct points"};
      }
      break;
    }
    if (attempt + 1 == opts.max_attempts) rep.witnesses.push_back("repeated root of " + res.str());
  }

  VarList vw = {"x", "y", "z", "w"};
  Poly<K> g = Poly<K>::variable(vw, "w", field) * q.embed(vw) + r.embed(vw);
  rep.g3 = {Status::pass, "fiber surface quasi-smooth on the x, y, z charts"};
  for (std::size_t chart = 0; chart < 3; ++chart) {
    Poly<K> gc = g.evaluate(chart, FieldOps<K>::from_int(1, field));
    std::vector<Poly<K>> gens{gc};
    for (std::size_t i = 0; i < 4; ++i)
      if (i != chart) gens.push_back(gc.derivative(i));
    bool prob = false;
    std::string note;
    Triviality t = field_triviality(gens, opts.groebner, prob, note);
    rep.probabilistic = rep.probabilistic || prob;
    if (t == Triviality::nontrivial) {
      rep.g3 = {Status::fail, "singular point on the chart " + vw[chart] + "=1"};
      rep.witnesses.push_back("fiber surface singular on chart " + vw[chart] + "=1");
      break;
    }
    if (t == Triviality::inconclusive) rep.g3 = {Status::inconclusive, "chart " + vw[chart] + "=1: " + note};
  }
  rep.overall = combine(combine(rep.g1.status, rep.g2.status), rep.g3.status);
  return rep;
}

template GeneralityReport generality_forms(const Poly<Rational>&, const Poly<Rational>&, const GeneralityOptions&,
                                           std::uint64_t);
template GeneralityReport generality_forms(const Poly<Fp>&, const Poly<Fp>&, const GeneralityOptions&,
                                           std::uint64_t);

namespace {

SubVerdict merge(const std::vector<SubVerdict>& runs) {
  bool all_pass = true, all_fail = true;
  for (const auto& s : runs) {
    all_pass = all_pass && s.status == Status::pass;
    all_fail = all_fail && s.status == Status::fail;
  }
  if (runs.empty()) return {Status::inconclusive, "no splitting prime found"};
  if (all_pass) return {Status::pass, runs.front().detail};
  if (all_fail) return {Status::fail, runs.front().detail};
  return {Status::inconclusive, "prime fields disagree"};
}

}  // namespace

GeneralityReport generality_check(const SingularFiber& s, const Decomposition& parts, const GeneralityOptions& opts) {
  std::uint64_t seed = opts.seed;
  if (s.root.kind == RootClass::Kind::rational) {
    GeneralityReport rep = generality_forms(s.q_bar, s.r_bar, opts, seed ^ std::hash<std::string>{}(s.root.label()));
    rep.fiber = s.root.label();
    return rep;
  }
  GeneralityReport rep;
  rep.fiber = s.root.label();
  rep.probabilistic = true;
  std::vector<SubVerdict> g1, g2, g3, all;
  UPoly<Rational> h = to_univariate(s.root.form.evaluate(1, Rational(1)), 0);
  int found = 0;
  for (std::uint32_t p = opts.splitting_start; found < opts.splitting_primes && p < opts.splitting_start + 200000; p += 2) {
    if (!is_prime(p)) continue;
    UPoly<Fp> hp;
    PolyFp qp, rp;
    try {
      hp = reduce_mod(h, p);
      qp = reduce_mod(parts.q, p);
      rp = reduce_mod(parts.r, p);
    } catch (const std::domain_error&) {
      continue;
    }
    if (hp.degree() != h.degree()) continue;
    auto roots = roots_mod_p(hp);
    if (static_cast<int>(roots.size()) != h.degree()) continue;
    ++found;
    rep.fields.push_back(FieldTag::modp(p).str());
    SubVerdict a{Status::pass, ""}, b{Status::pass, ""}, c{Status::pass, ""};
    for (auto t : roots) {
      Fp tu(t, p), one(1, p);
      GeneralityReport sub = generality_forms(specialize(qp, tu, one), specialize(rp, tu, one), opts, seed + t);
      auto fold = [](SubVerdict& acc, const SubVerdict& x) {
        Status st = combine(acc.status, x.status);
        if (st != acc.status) acc.detail = x.detail;
        acc.status = st;
        if (acc.detail.empty()) acc.detail = x.detail;
      };
      fold(a, sub.g1);
      fold(b, sub.g2);
      fold(c, sub.g3);
      for (const auto& w : sub.witnesses)
        rep.witnesses.push_back("F_" + std::to_string(p) + ", root " + std::to_string(t) + ": " + w);
      rep.attempts += sub.attempts;
      if (rep.resultant_degree == -1 || rep.resultant_degree == 8) rep.resultant_degree = sub.resultant_degree;
    }
    g1.push_back(a);
    g2.push_back(b);
    g3.push_back(c);
  }
  rep.g1 = merge(g1);
  rep.g2 = merge(g2);
  rep.g3 = merge(g3);
  rep.overall = combine(combine(rep.g1.status, rep.g2.status), rep.g3.status);
  if (found == 0) rep.witnesses.push_back("no prime below the search limit splits " + s.root.form.str());
  return rep;
}

}  // namespace dp2
