#include "corpus.hpp"

#include <algorithm>
#include <map>

#include "dp2/polycore/random.hpp"

namespace corpus {

using dp2::MultiPoly;
using dp2::Rational;

namespace {

const dp2::VarList& ring() { return dp2::scroll_vars(); }

MultiPoly lin(long alpha) {
  // u - alpha v; alpha = 1000 stands for v
  if (alpha == 1000) return dp2::parse_poly("v", ring());
  return dp2::parse_poly("u - " + std::to_string(alpha) + "*v", ring());
}

MultiPoly product(const std::vector<long>& roots) {
  MultiPoly p = MultiPoly::from_int(ring(), 1);
  for (long a : roots) p *= lin(a);
  return p;
}

MultiPoly var(const char* n) { return MultiPoly::variable(ring(), n); }

dp2::FibrationModel hyper(const dp2::ScrollWeights& w, MultiPoly F) {
  return {w, std::move(F), dp2::FibrationModel::Shape::hypersurface, {}};
}

struct Diagonal {
  dp2::ScrollWeights w;
  std::vector<long> f, A, B, C;
  Rational cB = 1;
};

MultiPoly assemble(const Diagonal& d) {
  return product(d.f) * var("w").pow(2) + product(d.A) * var("x").pow(4) +
         product(d.B).scaled(d.cB) * var("y").pow(4) + product(d.C) * var("z").pow(4);
}

std::vector<long> fresh(long& next, long k) {
  std::vector<long> out;
  for (long i = 0; i < k; ++i) out.push_back(next++);
  return out;
}

}  // namespace

std::vector<Handcrafted> diagonal_models() {
  const std::vector<dp2::ScrollWeights> weights = {{0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 1, 3}, {0, 0, 1, 4},
                                                   {0, 1, 1, 4}, {0, 1, 1, 5}, {1, 1, 2, 5}};
  std::vector<Handcrafted> out;
  for (const auto& w : weights) {
    const long nf = w.N(), nA = w.ell, nB = w.ell - 4 * w.a, nC = w.ell - 4 * w.b;
    const std::string tag = w.str();
    {
      long next = -4;
      Diagonal d{w, fresh(next, nf), fresh(next, nA), fresh(next, nB), fresh(next, nC)};
      out.push_back({"smooth " + tag, hyper(w, assemble(d)), false});
    }
    if (nA >= 2) {
      long next = -4;
      Diagonal d{w, fresh(next, nf), fresh(next, nA - 1), fresh(next, nB), fresh(next, nC)};
      d.A.push_back(d.A.front());
      out.push_back({"A double root " + tag, hyper(w, assemble(d)), true});
    }
    if (nf >= 2) {
      long next = -4;
      Diagonal d{w, fresh(next, nf - 1), fresh(next, nA), fresh(next, nB), fresh(next, nC)};
      d.f.push_back(d.f.front());
      out.push_back({"f double root " + tag, hyper(w, assemble(d)), true});
    }
    if (nA >= 1 && nB >= 1) {
      long next = -4;
      Diagonal d{w, fresh(next, nf), fresh(next, nA), fresh(next, nB - 1), fresh(next, nC)};
      const long shared = d.A.front();
      d.B.insert(d.B.begin(), shared);
      // d/du of A x^4 + cB B y^4 at (shared : 1) vanishes at x = y = 1
      auto cofactor = [&](const std::vector<long>& roots) {
        Rational s = 1;
        for (std::size_t i = 1; i < roots.size(); ++i) s *= Rational(shared == 1000 ? 0 : shared - roots[i]);
        return s;
      };
      d.cB = -cofactor(d.A) / cofactor(d.B);
      out.push_back({"shared root " + tag, hyper(w, assemble(d)), true});
    }
  }
  return out;
}

std::vector<FiberCase> conic_fibers() {
  const dp2::VarList xyz = {"x", "y", "z"};
  std::vector<FiberCase> out;
  dp2::Rng rng(2024);
  for (int k = 0; k < 24; ++k) {
    // binary octic in (s, t) with integer roots; kind 1 repeats a root, kind 2 takes r in (q)
    const int kind = k % 6 == 4 ? 1 : (k % 6 == 5 ? 2 : 0);
    std::vector<long> roots;
    while (roots.size() < 8) {
      long a = rng.uniform(-9, 9);
      if (std::find(roots.begin(), roots.end(), a) == roots.end()) roots.push_back(a);
    }
    if (kind == 1) roots[7] = roots[0];
    // coefficients of prod (s - a t), index = power of s
    std::vector<Rational> c{1};
    for (long a : roots) {
      std::vector<Rational> n(c.size() + 1, Rational(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        n[i + 1] += c[i];
        n[i] -= c[i] * Rational(a);
      }
      c = n;
    }
    // x = s^2, y = s t, z = t^2
    MultiPoly q0 = dp2::parse_poly("x*z - y^2", xyz);
    MultiPoly r0(xyz);
    for (unsigned e = 0; e <= 8; ++e) {
      unsigned j = e % 2, i = (e - j) / 2;
      r0.add_term(dp2::Exponent{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                                static_cast<std::uint16_t>(4 - i - j)},
                  c[e]);
    }
    MultiPoly h(xyz);
    for (const char* m : {"x^2", "x*y", "y^2", "y*z", "z^2", "x*z"})
      h += dp2::parse_poly(m, xyz).scaled(Rational(rng.uniform(-2, 2)));
    r0 += q0 * h;
    if (kind == 2) r0 = q0 * h + q0 * q0;
    // scramble by unipotent upper and lower integer matrices
    auto affine = [&](const std::string& a, const std::string& b) {
      return std::map<std::string, MultiPoly>{{"x", dp2::parse_poly(a, xyz)}, {"y", dp2::parse_poly(b, xyz)},
                                              {"z", dp2::parse_poly("z", xyz)}};
    };
    auto n = [&](long lo, long hi) { return std::to_string(rng.uniform(lo, hi)); };
    auto upper = affine("x + " + n(-2, 2) + "*y + " + n(-2, 2) + "*z", "y + " + n(-2, 2) + "*z");
    std::map<std::string, MultiPoly> lower{{"x", dp2::parse_poly("x", xyz)},
                                           {"y", dp2::parse_poly("y", xyz)},
                                           {"z", dp2::parse_poly("z + " + n(-1, 1) + "*x + " + n(-1, 1) + "*y", xyz)}};
    q0 = q0.substitute(upper).substitute(lower);
    r0 = r0.substitute(upper).substitute(lower);
    const MultiPoly& q = q0;
    const MultiPoly& r = r0;
    // model over (0,0,0,2): f = u v, fiber (0:1) carries q, r; the fiber at (1:0) is diagonal
    const dp2::VarList& R = ring();
    MultiPoly F = dp2::parse_poly("u*v*w^2 + u^2*(x^2 + 2*y^2 + 3*z^2)*w + u^2*(x^4 - y^4 + 5*z^4)", R);
    F += q.embed(R) * var("v").pow(2) * var("w") + r.embed(R) * var("v").pow(2);
    out.push_back({"conic fiber " + std::to_string(k), hyper({0, 0, 0, 2}, F), kind == 0 ? 8 : (kind == 1 ? 7 : -1)});
  }
  return out;
}

std::vector<dp2::Exponent> monomials_of(const dp2::ScrollWeights& w, long base, long fiber) {
  std::vector<dp2::Exponent> out;
  for (long ew = 0; 2 * ew <= fiber; ++ew)
    for (long ez = 0; 2 * ew + ez <= fiber; ++ez)
      for (long ey = 0; 2 * ew + ez + ey <= fiber; ++ey) {
        long ex = fiber - 2 * ew - ez - ey;
        long rest = base - w.a * ey - w.b * ez - w.c * ew;
        if (rest < 0) continue;
        for (long eu = 0; eu <= rest; ++eu) {
          auto c = [](long v) { return static_cast<std::uint16_t>(v); };
          out.push_back({c(eu), c(rest - eu), c(ex), c(ey), c(ez), c(ew)});
        }
      }
  return out;
}

dp2::FibrationModel random_model(std::uint64_t seed, const dp2::ScrollWeights& w, bool force_z2) {
  dp2::Rng rng(seed);
  std::vector<long> roots;
  if (rng.coin() && w.N() > 0) roots.push_back(1000);
  while (static_cast<long>(roots.size()) < w.N()) {
    long a = rng.uniform(-6, 6);
    if (std::find(roots.begin(), roots.end(), a) == roots.end()) roots.push_back(a);
  }
  MultiPoly f = product(roots).scaled(Rational(rng.uniform(1, 3)));
  auto fill = [&](long base, long fiber, long lo, long hi) {
    MultiPoly p(ring());
    for (const auto& e : monomials_of(w, base, fiber))
      if (e[5] == 0) p.add_term(e, Rational(rng.uniform(lo, hi)));
    return p;
  };
  MultiPoly q = fill(w.ell - w.c, 2, -2, 2);
  if (force_z2 && w.ell - w.c - 2 * w.b >= 0) {
    dp2::Exponent e{static_cast<std::uint16_t>(w.ell - w.c - 2 * w.b), 0, 0, 0, 2, 0};
    if (q.coeff(e).is_zero()) q.add_term(e, Rational(1));
  }
  MultiPoly r = fill(w.ell, 4, -3, 3);
  return hyper(w, f * var("w").pow(2) + q * var("w") + r);
}

}  // namespace corpus
