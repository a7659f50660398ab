#include "dp2/cli/cli.hpp"
#include "dp2/links/links.hpp"
#include "dp2/polycore/random.hpp"

namespace dp2 {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Exponent> bidegree_monomials(const ScrollWeights& w) {
  const std::vector<long> base = WeightMatrix::main_scroll(w).base();
  std::vector<Exponent> out;
  for (long ew = 2; ew >= 0; --ew) {
    const long rest = 4 - 2 * ew;
    for (long ex = rest; ex >= 0; --ex) {
      for (long ey = rest - ex; ey >= 0; --ey) {
        const long ez = rest - ex - ey;
        const long d = w.ell - ex * base[2] - ey * base[3] - ez * base[4] - ew * base[5];
        if (d < 0) continue;
        for (long eu = d; eu >= 0; --eu) {
          Exponent e(6, 0);
          e[0] = static_cast<int>(eu);
          e[1] = static_cast<int>(d - eu);
          e[2] = static_cast<int>(ex);
          e[3] = static_cast<int>(ey);
          e[4] = static_cast<int>(ez);
          e[5] = static_cast<int>(ew);
          out.push_back(e);
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<std::string> certificate_failures(const FibrationModel& m) {
  std::vector<std::string> bad;
  if (decompose(m).degenerate) return bad;
  BigInvolution inv = big_involution(m);
  if (!inv.certificate.preserves) bad.push_back("involution does not preserve the equation");
  if (!inv.certificate.involutive) bad.push_back("involution is not an involution");
  FactorSplit split;
  try {
    split = factor_split(m);
  } catch (const PreconditionError&) {
    return bad;  // repeated roots: no models to build
  }
  if (m.weights.N() > 6) return bad;
  std::vector<ModelXI> models = all_models(m);
  for (const auto& x : models)
    if (!x.eq1_homogeneous || !x.eq2_homogeneous) bad.push_back("model is not homogeneous");
  HypersurfaceElimination e0 = eliminate_to_hypersurface(m, models.front());
  HypersurfaceElimination e1 = eliminate_to_hypersurface(m, models.back());
  if (!e0.matches || !e0.bidegree_ok) bad.push_back("elimination of the empty model fails");
  if (!e1.matches || !e1.bidegree_ok) bad.push_back("elimination of the full model fails");
  for (int j = 1; j <= static_cast<int>(split.roots.size()); ++j) {
    LinkStep step = link_at(m, split, models.front(), j);
    if (!step.eq1_certified || !step.eq2_certified) bad.push_back("link " + std::to_string(j) + " not certified");
  }
  return bad;
}

}  // namespace

FuzzModelsResult fuzz_models(std::uint64_t count, std::uint64_t seed, const FuzzRanges& ranges,
                             std::uint64_t run_limit, const PipelineOptions& opts) {
  FuzzModelsResult res;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    ScrollWeights w{rng.uniform(ranges.a_lo, ranges.a_hi), rng.uniform(ranges.b_lo, ranges.b_hi),
                    rng.uniform(ranges.c_lo, ranges.c_hi), rng.uniform(ranges.ell_lo, ranges.ell_hi)};
    if (w.N() < 0) {
      res.rejected.push_back("model " + std::to_string(i) + " at " + w.str() + ": N = ell - 2c = " +
                             std::to_string(w.N()) + " < 0");
      continue;
    }
    std::vector<Exponent> monos = bidegree_monomials(w);
    MultiPoly p(scroll_vars());
    for (const auto& e : monos) {
      long c = rng.uniform(-3, 3);
      if (c == 0) continue;
      MultiPoly t(scroll_vars());
      t.add_term(e, Rational(c));
      p += t;
    }
    if (p.is_zero()) {
      res.rejected.push_back("model " + std::to_string(i) + " at " + w.str() + ": no nonzero equation of bidegree (4, " +
                             std::to_string(w.ell) + ")");
      continue;
    }
    FibrationModel m;
    m.weights = w;
    m.equation = p;
    DocOptions o;
    o.seed = opts.seed;
    res.corpus.push_back(document_from_model(m, o));
  }

  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& d : res.corpus) h = fnv1a(emit_toml(d), h);
  res.corpus_hash = h;

  const long n = static_cast<long>(res.corpus.size());
  std::vector<std::vector<std::string>> fails(res.corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      for (auto& f : certificate_failures(res.corpus[idx].model()))
        fails[idx].push_back("model " + std::to_string(i) + ": " + f);
    } catch (const std::exception& e) {
      fails[idx].push_back("model " + std::to_string(i) + ": " + e.what());
    }
  }
  for (auto& f : fails) res.certificate_failures.insert(res.certificate_failures.end(), f.begin(), f.end());

  for (std::size_t i = 0; i < res.corpus.size() && i < run_limit; ++i) {
    VerdictReport r = run_pipeline(res.corpus[i], opts);
    ++res.pipeline_runs;
    switch (r.exit_code()) {
      case 0: ++res.passed; break;
      case 1: ++res.violated; break;
      default: ++res.inconclusive; break;
    }
  }
  return res;
}

}  // namespace dp2
