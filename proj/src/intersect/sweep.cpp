#include <omp.h>

#include "dp2/intersect/intersect.hpp"

namespace dp2 {

std::vector<ScrollWeights> sweep_weights(const SweepGrid& g) {
  std::vector<ScrollWeights> out;
  for (long a = g.a_min; a <= g.a_max; ++a)
    for (long b = a; b <= g.b_max; ++b)
      for (long c = g.c_min; c <= g.c_max; ++c)
        for (long l = g.ell_min; l <= g.ell_max; ++l) out.push_back({a, b, c, l});
  return out;
}

namespace {

// Both routes scaled by 8 so every quantity is an integer.
struct ScaledWeights {
  long m3x8;   // 8 * M^3 on X
  long m2fx8;  // 8 * M^2 F on X
  long m5x8;   // 8 * M_I^5
  long m4fx8;  // 8 * M_I^4 F
  long e1m, e1f, e2m, e2f;
};

ScaledWeights scale(const ScrollWeights& w, long k) {
  long c1 = w.c + k, c2 = w.c + w.N() - k;
  ScaledWeights s;
  s.m3x8 = 4 * w.ell - 16 * w.a - 16 * w.b - 8 * w.c;
  s.m2fx8 = 16;
  s.m4fx8 = 2;
  s.m5x8 = -(4 * w.a + 4 * w.b + 2 * c1 + 2 * c2) * s.m4fx8 / 4;
  s.e1m = 2;
  s.e1f = w.c + w.N();
  s.e2m = 4;
  s.e2f = w.ell;
  return s;
}

struct Partial {
  std::uint64_t evaluations = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first;
};

Partial sweep_one(const ScrollWeights& w, const SweepGrid& g) {
  Partial p;
  ScaledWeights s = scale(w, 0);
  for (long k = 1; k <= w.N(); ++k) {
    ScaledWeights t = scale(w, k);
    if (t.m5x8 != s.m5x8 || t.m4fx8 != s.m4fx8) {
      ++p.mismatches;
      if (!p.first) p.first = w.str() + " top intersections depend on |I| = " + std::to_string(k);
    }
  }
  // Equations contribute a fixed pair (M^2 coefficient, M F coefficient).
  long eq_mm = s.e1m * s.e2m;
  long eq_mf = s.e1m * s.e2f + s.e1f * s.e2m;
  for (long p1 = g.entry_min; p1 <= g.entry_max; ++p1)
    for (long q1 = g.entry_min; q1 <= g.entry_max; ++q1)
      for (long p2 = g.entry_min; p2 <= g.entry_max; ++p2)
        for (long q2 = g.entry_min; q2 <= g.entry_max; ++q2) {
          long mm12 = p1 * p2, mf12 = p1 * q2 + q1 * p2;
          for (long p3 = g.entry_min; p3 <= g.entry_max; ++p3)
            for (long q3 = g.entry_min; q3 <= g.entry_max; ++q3) {
              long lhs = mm12 * p3 * s.m3x8 + (mm12 * q3 + mf12 * p3) * s.m2fx8;
              long m3 = mm12 * p3;
              long m2f = mm12 * q3 + mf12 * p3;
              long rhs = m3 * eq_mm * s.m5x8 + (m3 * eq_mf + m2f * eq_mm) * s.m4fx8;
              ++p.evaluations;
              if (lhs != rhs) {
                ++p.mismatches;
                if (!p.first)
                  p.first = w.str() + " classes (" + std::to_string(p1) + "," + std::to_string(q1) + ") (" +
                            std::to_string(p2) + "," + std::to_string(q2) + ") (" + std::to_string(p3) + "," +
                            std::to_string(q3) + ")";
              }
            }
        }
  return p;
}

}  // namespace

SweepResult sameint_sweep_serial(const SweepGrid& g) {
  SweepResult r;
  auto ws = sweep_weights(g);
  r.weights = ws.size();
  for (const auto& w : ws) {
    Partial p = sweep_one(w, g);
    r.evaluations += p.evaluations;
    r.mismatches += p.mismatches;
    if (!r.first_mismatch && p.first) r.first_mismatch = p.first;
  }
  return r;
}

SweepResult sameint_sweep_parallel(const SweepGrid& g) {
  SweepResult r;
  auto ws = sweep_weights(g);
  r.weights = ws.size();
  std::vector<Partial> parts(ws.size());
  const long n = static_cast<long>(ws.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) parts[i] = sweep_one(ws[i], g);
  for (const auto& p : parts) {
    r.evaluations += p.evaluations;
    r.mismatches += p.mismatches;
    if (!r.first_mismatch && p.first) r.first_mismatch = p.first;
  }
  return r;
}

}  // namespace dp2
