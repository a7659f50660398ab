#include "dp2/polycore/groebner.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace dp2 {

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::trivial: return "trivial";
    case Triviality::nontrivial: return "nontrivial";
    case Triviality::inconclusive: return "inconclusive";
  }
  return "?";
}

std::uint64_t default_step_budget() {
  if (const char* env = std::getenv("DP2_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 20'000'000ULL;
}

const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes = {65521, 65519, 65497};
  return primes;
}

template struct GroebnerRun<Rational>;
template struct GroebnerRun<Fp>;

namespace {

struct Mono {
  std::array<std::uint16_t, kMaxGroebnerVars> e{};
  std::uint32_t deg = 0;
};

struct Ctx {
  std::size_t n = 0;

  bool greater(const Mono& a, const Mono& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    for (std::size_t i = n; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
  bool equal(const Mono& a, const Mono& b) const {
    if (a.deg != b.deg) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (a.e[i] != b.e[i]) return false;
    return true;
  }
  bool divides(const Mono& a, const Mono& b) const {
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }
  bool coprime(const Mono& a, const Mono& b) const {
    for (std::size_t i = 0; i < n; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  Mono lcm(const Mono& a, const Mono& b) const {
    Mono m;
    for (std::size_t i = 0; i < n; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }
  Mono quotient(const Mono& a, const Mono& b) const {  // a / b
    Mono m;
    for (std::size_t i = 0; i < n; ++i) {
      m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }
  Mono mul(const Mono& a, const Mono& b) const {
    Mono m;
    for (std::size_t i = 0; i < n; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
  }
};

template <class K>
struct Term {
  Mono m;
  K c;
};

template <class K>
struct IPoly {
  std::vector<Term<K>> t;  // strictly decreasing monomials
  std::uint32_t sugar = 0;
  bool empty() const { return t.empty(); }
  const Mono& lm() const { return t.front().m; }
};

struct BudgetExceeded {};

template <class K>
class Engine {
 public:
  Engine(std::size_t n, FieldTag field, std::uint64_t budget) : field_(field), budget_(budget) { ctx_.n = n; }

  std::uint64_t steps() const { return steps_; }

  void make_monic(IPoly<K>& p) const {
    if (p.empty() || FieldOps<K>::is_one(p.t.front().c)) return;
    K inv = FieldOps<K>::inverse(p.t.front().c);
    for (auto& term : p.t) term.c *= inv;
  }

  // p - c * m * g, with the leading terms known to cancel.
  IPoly<K> sub_mul(const IPoly<K>& p, std::size_t pstart, const K& c, const Mono& m, const IPoly<K>& g) {
    IPoly<K> r;
    r.t.reserve(p.t.size() - pstart + g.t.size());
    std::size_t i = pstart + 1, j = 1;
    while (i < p.t.size() || j < g.t.size()) {
      if (j >= g.t.size()) {
        r.t.push_back(p.t[i++]);
        continue;
      }
      Mono gm = ctx_.mul(g.t[j].m, m);
      if (i >= p.t.size() || ctx_.greater(gm, p.t[i].m)) {
        r.t.push_back({gm, -(c * g.t[j].c)});
        ++j;
      } else if (ctx_.equal(gm, p.t[i].m)) {
        K v = p.t[i].c - c * g.t[j].c;
        if (!FieldOps<K>::is_zero(v)) r.t.push_back({gm, v});
        ++i;
        ++j;
      } else {
        r.t.push_back(p.t[i++]);
      }
    }
    return r;
  }

  const IPoly<K>* find_reducer(const Mono& m, const std::vector<std::size_t>& active) const {
    for (std::size_t k : active)
      if (ctx_.divides(polys_[k].lm(), m)) return &polys_[k];
    return nullptr;
  }

  // Top reduction only; tails are cleaned up once in reduced_basis.
  IPoly<K> normal_form(IPoly<K> p, const std::vector<std::size_t>& active) {
    IPoly<K> rem;
    rem.sugar = p.sugar;
    std::size_t start = 0;
    while (start < p.t.size()) {
      const Term<K>& lt = p.t[start];
      const IPoly<K>* g = find_reducer(lt.m, active);
      if (!g) {
        rem.t.assign(p.t.begin() + static_cast<long>(start), p.t.end());
        break;
      }
      if (++steps_ > budget_) throw BudgetExceeded{};
      Mono q = ctx_.quotient(lt.m, g->lm());
      p.sugar = std::max(p.sugar, g->sugar + q.deg);
      p = IPoly<K>{sub_mul(p, start, lt.c, q, *g).t, p.sugar};
      start = 0;
    }
    rem.sugar = std::max(rem.sugar, p.sugar);
    make_monic(rem);
    return rem;
  }

  IPoly<K> spoly(std::size_t a, std::size_t b) {
    const IPoly<K>& f = polys_[a];
    const IPoly<K>& g = polys_[b];
    Mono l = ctx_.lcm(f.lm(), g.lm());
    Mono qf = ctx_.quotient(l, f.lm());
    Mono qg = ctx_.quotient(l, g.lm());
    IPoly<K> fm;
    fm.t.reserve(f.t.size());
    for (const auto& term : f.t) fm.t.push_back({ctx_.mul(term.m, qf), term.c});
    IPoly<K> r = sub_mul(fm, 0, FieldOps<K>::from_int(1, field_), qg, g);
    r.sugar = std::max(f.sugar + qf.deg, g.sugar + qg.deg);
    if (++steps_ > budget_) throw BudgetExceeded{};
    return r;
  }

  struct Pair {
    std::size_t i, j;
    Mono lcm;
    std::uint32_t sugar;
    std::uint64_t serial;
  };

  // Gebauer-Moller update with the new element h = polys_[hidx].
  void update(std::size_t hidx) {
    const Mono& hm = polys_[hidx].lm();
    std::vector<Pair> c;
    for (std::size_t g : active_) {
      Mono l = ctx_.lcm(polys_[g].lm(), hm);
      std::uint32_t s = std::max(polys_[g].sugar + ctx_.quotient(l, polys_[g].lm()).deg,
                                 polys_[hidx].sugar + ctx_.quotient(l, hm).deg);
      c.push_back({g, hidx, l, s, serial_++});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = ctx_.coprime(polys_[p.i].lm(), hm);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (ctx_.divides(c[m].lcm, p.lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (ctx_.divides(d[m].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const auto& p : d)
      if (!ctx_.coprime(polys_[p.i].lm(), hm)) e.push_back(p);
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      bool drop = ctx_.divides(hm, p.lcm) && !ctx_.equal(ctx_.lcm(polys_[p.i].lm(), hm), p.lcm) &&
                  !ctx_.equal(ctx_.lcm(polys_[p.j].lm(), hm), p.lcm);
      if (!drop) kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (auto& p : e) pairs_.push_back(p);
    std::vector<std::size_t> na;
    for (std::size_t g : active_)
      if (!ctx_.divides(hm, polys_[g].lm())) na.push_back(g);
    na.push_back(hidx);
    active_ = std::move(na);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
      } else if (ctx_.greater(b.lcm, a.lcm)) {
        best = k;
      } else if (ctx_.equal(a.lcm, b.lcm) && a.serial < b.serial) {
        best = k;
      }
    }
    return best;
  }

  bool is_unit(const IPoly<K>& p) const { return p.t.size() == 1 && p.lm().deg == 0; }

  // Returns true when a unit appeared (and stop_on_unit).
  bool run(std::vector<IPoly<K>> gens, bool stop_on_unit) {
    for (auto& g : gens) {
      make_monic(g);
      if (is_unit(g) && stop_on_unit) {
        unit_ = true;
        return true;
      }
    }
    for (auto& g : gens) {
      IPoly<K> h = normal_form(g, active_);
      if (h.empty()) continue;
      if (is_unit(h)) unit_ = true;
      if (unit_ && stop_on_unit) return true;
      polys_.push_back(std::move(h));
      update(polys_.size() - 1);
    }
    while (!pairs_.empty()) {
      std::size_t k = select_pair();
      Pair p = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<long>(k));
      IPoly<K> s = spoly(p.i, p.j);
      IPoly<K> h = normal_form(std::move(s), active_);
      if (h.empty()) continue;
      if (is_unit(h)) unit_ = true;
      if (unit_ && stop_on_unit) return true;
      polys_.push_back(std::move(h));
      update(polys_.size() - 1);
    }
    return unit_;
  }

  std::vector<IPoly<K>> reduced_basis() {
    if (unit_) {
      IPoly<K> one;
      one.t.push_back({Mono{}, FieldOps<K>::from_int(1, field_)});
      return {one};
    }
    std::vector<std::size_t> minimal;
    for (std::size_t a : active_) {
      bool redundant = false;
      for (std::size_t b : active_)
        if (a != b && ctx_.divides(polys_[b].lm(), polys_[a].lm()) &&
            (!ctx_.equal(polys_[b].lm(), polys_[a].lm()) || b < a))
          redundant = true;
      if (!redundant) minimal.push_back(a);
    }
    std::vector<IPoly<K>> out;
    for (std::size_t a : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t b : minimal)
        if (b != a) others.push_back(b);
      IPoly<K> head;
      head.t.push_back(polys_[a].t.front());
      IPoly<K> tail;
      tail.t.assign(polys_[a].t.begin() + 1, polys_[a].t.end());
      IPoly<K> rt = tail_reduce(tail, others);
      head.t.insert(head.t.end(), rt.t.begin(), rt.t.end());
      out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly<K>& x, const IPoly<K>& y) { return ctx_.greater(y.lm(), x.lm()); });
    return out;
  }

  const Ctx& ctx() const { return ctx_; }

 private:
  IPoly<K> tail_reduce(IPoly<K> p, const std::vector<std::size_t>& active) {
    IPoly<K> rem;
    std::size_t start = 0;
    while (start < p.t.size()) {
      const Term<K>& lt = p.t[start];
      const IPoly<K>* g = find_reducer(lt.m, active);
      if (!g) {
        rem.t.push_back(lt);
        ++start;
        continue;
      }
      Mono q = ctx_.quotient(lt.m, g->lm());
      p = IPoly<K>{sub_mul(p, start, lt.c, q, *g).t, 0};
      start = 0;
    }
    return rem;
  }

  Ctx ctx_;
  FieldTag field_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::uint64_t serial_ = 0;
  bool unit_ = false;
  std::vector<IPoly<K>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

template <class K>
GroebnerRun<K> groebner_basis(const std::vector<Poly<K>>& gens, std::uint64_t budget, bool stop_on_unit) {
  GroebnerRun<K> out;
  std::vector<const Poly<K>*> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(&g);
  if (nz.empty()) {
    out.verdict = Triviality::nontrivial;
    return out;
  }
  const VarList& vars = nz.front()->vars();
  FieldTag field = nz.front()->field();
  for (auto* g : nz)
    if (g->vars() != vars || !(g->field() == field)) throw std::invalid_argument("generators live in different rings");
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (auto* g : nz)
      if (g->degree_in(i) > 0) {
        used.push_back(i);
        break;
      }
  if (used.size() > kMaxGroebnerVars) throw std::invalid_argument("too many variables for the Groebner engine");

  std::vector<IPoly<K>> ig;
  for (auto* g : nz) {
    IPoly<K> p;
    std::uint32_t deg = 0;
    for (const auto& [e, c] : g->terms()) {
      Mono m;
      for (std::size_t k = 0; k < used.size(); ++k) {
        m.e[k] = e[used[k]];
        m.deg += m.e[k];
      }
      deg = std::max(deg, m.deg);
      p.t.push_back({m, c});
    }
    p.sugar = deg;
    ig.push_back(std::move(p));
  }
  Engine<K> eng(used.size(), field, budget);
  try {
    bool unit = eng.run(std::move(ig), stop_on_unit);
    out.verdict = unit ? Triviality::trivial : Triviality::nontrivial;
    for (const auto& p : eng.reduced_basis()) {
      Poly<K> q(vars, field);
      for (const auto& term : p.t) {
        Exponent e(vars.size(), 0);
        for (std::size_t k = 0; k < used.size(); ++k) e[used[k]] = term.m.e[k];
        q.add_term(e, term.c);
      }
      out.basis.push_back(std::move(q));
    }
  } catch (const BudgetExceeded&) {
    out.verdict = Triviality::inconclusive;
  }
  out.steps = eng.steps();
  return out;
}

template GroebnerRun<Rational> groebner_basis(const std::vector<Poly<Rational>>&, std::uint64_t, bool);
template GroebnerRun<Fp> groebner_basis(const std::vector<Poly<Fp>>&, std::uint64_t, bool);

TrivialityReport ideal_triviality(const std::vector<MultiPoly>& gens, const GroebnerOptions& opts) {
  TrivialityReport rep;
  if (opts.exact) {
    auto run = groebner_basis(gens, opts.step_budget);
    rep.verdict = run.verdict;
    rep.probabilistic = false;
    rep.steps = run.steps;
    rep.runs.emplace_back("Q", run.verdict);
    return rep;
  }
  if (opts.primes.empty()) throw std::invalid_argument("no primes given for modular Groebner runs");
  std::vector<Triviality> seen;
  for (std::uint32_t p : opts.primes) {
    std::vector<PolyFp> red;
    Triviality v;
    try {
      for (const auto& g : gens) red.push_back(reduce_mod(g, p));
      auto run = groebner_basis(red, opts.step_budget);
      v = run.verdict;
      rep.steps += run.steps;
    } catch (const std::domain_error&) {
      v = Triviality::inconclusive;
      rep.note = "prime " + std::to_string(p) + " divides a coefficient denominator";
    }
    rep.runs.emplace_back(FieldTag::modp(p).str(), v);
    seen.push_back(v);
  }
  rep.verdict = seen.front();
  for (auto v : seen) {
    if (v == Triviality::inconclusive) {
      rep.verdict = Triviality::inconclusive;
      if (rep.note.empty()) rep.note = "step budget exhausted";
      break;
    }
    if (v != rep.verdict) {
      rep.verdict = Triviality::inconclusive;
      rep.note = "primes disagree";
    }
  }
  return rep;
}

bool buchberger_trivial(const std::vector<MultiPoly>& gens, FieldTag field) {
  Triviality v;
  if (field.is_rational()) {
    v = groebner_basis(gens, default_step_budget()).verdict;
  } else {
    std::vector<PolyFp> red;
    for (const auto& g : gens) red.push_back(reduce_mod(g, field.prime));
    v = groebner_basis(red, default_step_budget()).verdict;
  }
  if (v == Triviality::inconclusive) throw std::runtime_error("Groebner step budget exhausted");
  return v == Triviality::trivial;
}

}  // namespace dp2
