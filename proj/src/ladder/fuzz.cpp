#include <omp.h>

#include <map>

#include "dp2/ladder/ladder.hpp"
#include "dp2/polycore/random.hpp"

namespace dp2 {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) { return splitmix(seed ^ splitmix(i + 1)); }

Rational ratio(Rng& r, long lo, long hi, long maxden) {
  long d = r.uniform(1, maxden);
  return Rational(r.uniform(lo * d, hi * d), d);
}

Rational unit_weight(Rng& r) {
  long d = r.uniform(1, 16);
  return Rational(r.uniform(1, d), d);
}

Rational sq(const Rational& x) { return x * x; }

Rational mult_sum(const FuzzPoint& p, int k) {
  if (k >= 2) {
    LadderState s;
    s.M = k;
    s.delta = p.delta;
    s.n = p.n;
    s.gamma = p.gamma;
    s.lambdas.assign(p.lambdas.begin(), p.lambdas.begin() + k);
    return multiplicity_bounds(s, Centre::point_off_section);
  }
  return Rational(4 * p.delta) * sq(p.n) * p.gamma;
}

Rational lower_sum(const FuzzPoint& p, int k) {
  Rational b = Rational(k - 1 + p.delta) * p.gamma;
  for (int i = 2; i <= k; ++i) b = b + (Rational(2) * p.n - p.lambdas[0] - p.lambdas[static_cast<std::size_t>(i - 1)]) / p.n;
  return Rational(4) * sq(p.n) * b;
}

std::vector<Rational> as_point(const FuzzPoint& p) {
  std::vector<Rational> v = {p.n, p.gamma, p.t, p.tF, p.tm};
  v.insert(v.end(), p.lambdas.begin(), p.lambdas.end());
  return v;
}

using CertCache = std::map<std::pair<int, int>, MultiPoly>;

CertCache certificates_for(Case c, int max_M) {
  CertCache cache;
  for (int M = 1; M <= max_M; ++M)
    for (int d = 0; d <= 1; ++d)
      if (case_admits(c, M, d)) cache[{M, d}] = contradiction_certificate(c, M, d).certificate;
  return cache;
}

void record(CaseFuzzResult& r, const FuzzPoint& p, bool feasible, bool miss) {
  ++r.samples;
  if (feasible) ++r.feasible;
  if (miss) ++r.identity_misses;
  if ((feasible || miss) && r.counterexamples.size() < 8) r.counterexamples.push_back(p);
}

std::pair<bool, bool> judge(Case c, const FuzzPoint& p, const CertCache& cache) {
  auto [upper, lower] = evaluate_sides(c, p);
  std::vector<Rational> pt = as_point(p);
  Rational cert = cache.at({p.M, p.delta}).evaluate_all(pt);
  return {lower < upper, !(upper - lower == -cert)};
}

}  // namespace

FuzzPoint random_point(Case c, std::uint64_t seed, int max_M) {
  Rng r(seed);
  FuzzPoint p;
  switch (c) {
    case Case::A1: p.M = 1; break;
    case Case::B2F: p.M = 2; break;
    default: p.M = static_cast<int>(r.uniform(2, std::max(2, max_M)));
  }
  p.delta = c == Case::B2F ? 1 : static_cast<int>(r.coin());
  p.n = Rational(r.uniform(1, 30), r.uniform(1, 6));
  p.gamma = ratio(r, 0, 5, 8);
  if (p.gamma.is_zero()) p.gamma = Rational(1, 8);
  p.t = unit_weight(r);
  p.tF = unit_weight(r);
  p.tm = unit_weight(r);
  for (int i = 0; i < p.M; ++i) {
    long d = r.uniform(1, 12);
    p.lambdas.push_back(p.n * Rational(r.uniform(0, 2 * d), d));
  }
  return p;
}

std::pair<Rational, Rational> evaluate_sides(Case c, const FuzzPoint& p) {
  const Rational n2 = sq(p.n), four_n2 = Rational(4) * n2;
  switch (c) {
    case Case::A1: {
      LadderState s;
      s.n = p.n;
      s.gamma = p.gamma;
      s.lambdas = {p.lambdas[0]};
      Rational coeff = (p.n - p.lambdas[0]) / p.n + p.gamma;
      return {multiplicity_bounds(s, Centre::fiber_curve), four_n2 * coeff};
    }
    case Case::A: return {mult_sum(p, p.M), lower_sum(p, p.M)};
    case Case::B2F: {
      Rational side = four_n2 * p.tF * p.gamma;
      return {Rational(2) * n2 + p.t * mult_sum(p, 2) + side, four_n2 + p.t * lower_sum(p, 2) + side};
    }
    case Case::B: return {Rational(2) * n2 + p.t * mult_sum(p, p.M), four_n2 + p.t * lower_sum(p, p.M)};
    case Case::C:
      return {Rational(2) * n2 + p.t * mult_sum(p, p.M) + p.tm * mult_sum(p, p.M - 1),
              four_n2 + p.t * lower_sum(p, p.M) + p.tm * lower_sum(p, p.M - 1)};
  }
  throw LadderError("unknown case");
}

CaseFuzzResult fuzz_case_serial(Case c, std::uint64_t samples, std::uint64_t seed, int max_M) {
  CertCache cache = certificates_for(c, max_M);
  CaseFuzzResult r;
  r.kase = c;
  for (std::uint64_t i = 0; i < samples; ++i) {
    FuzzPoint p = random_point(c, sample_seed(seed, i), max_M);
    auto [feasible, miss] = judge(c, p, cache);
    record(r, p, feasible, miss);
  }
  return r;
}

CaseFuzzResult fuzz_case(Case c, std::uint64_t samples, std::uint64_t seed, int max_M) {
  CertCache cache = certificates_for(c, max_M);
  std::vector<unsigned char> feasible(samples), miss(samples);
  const auto count = static_cast<long>(samples);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    FuzzPoint p = random_point(c, sample_seed(seed, static_cast<std::uint64_t>(i)), max_M);
    auto [f, m] = judge(c, p, cache);
    feasible[static_cast<std::size_t>(i)] = f;
    miss[static_cast<std::size_t>(i)] = m;
  }
  CaseFuzzResult r;
  r.kase = c;
  for (std::uint64_t i = 0; i < samples; ++i) {
    bool f = feasible[i], m = miss[i];
    FuzzPoint p;
    if ((f || m) && r.counterexamples.size() < 8) p = random_point(c, sample_seed(seed, i), max_M);
    record(r, p, f, m);
  }
  return r;
}

LadderState random_state(std::uint64_t seed, int max_M) {
  Rng r(seed);
  LadderState s;
  s.M = static_cast<int>(r.uniform(1, max_M));
  s.delta = static_cast<int>(r.coin());
  s.n = Rational(r.uniform(1, 40), r.uniform(1, 7));
  const Rational n2 = sq(s.n);
  s.nuQ = s.n / Rational(2) * ratio(r, 0, 1, 9);
  s.gamma = Rational(r.uniform(1, 60), r.uniform(1, 12));
  for (int i = 0; i < s.M; ++i) {
    s.lambdas.push_back(s.n * ratio(r, 0, 2, 10));
    s.alphas.push_back(Rational(2) * n2 * ratio(r, 0, 1, 10));
    s.ks.push_back(n2 * ratio(r, 0, 3, 5));
  }
  long d = r.uniform(2, 20);
  s.c0l0 = Rational(4) * s.gamma * n2 * Rational(r.uniform(0, d - 1), d);
  return s;
}

std::uint64_t dominance_violations_serial(std::uint64_t samples, std::uint64_t seed, int max_M) {
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    if (!vertical_degrees(random_state(sample_seed(seed, i), max_M)).dominated()) ++bad;
  return bad;
}

std::uint64_t dominance_violations(std::uint64_t samples, std::uint64_t seed, int max_M) {
  std::uint64_t bad = 0;
  const auto count = static_cast<long>(samples);
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (long i = 0; i < count; ++i)
    if (!vertical_degrees(random_state(sample_seed(seed, static_cast<std::uint64_t>(i)), max_M)).dominated()) ++bad;
  return bad;
}

}  // namespace dp2
