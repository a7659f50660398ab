#include "dp2/ladder/ladder.hpp"

namespace dp2 {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw LadderError("ladder state: " + what);
}

Rational sq(const Rational& x) { return x * x; }

}  // namespace

void LadderState::validate() const {
  const auto m = static_cast<std::size_t>(M);
  need(M >= 1, "M >= 1");
  need(delta == 0 || delta == 1, "delta in {0, 1}");
  need(n.sign() > 0, "n > 0");
  need(gamma.sign() > 0, "gamma > 0");
  need(nuQ.sign() >= 0 && nuQ <= n / Rational(2), "0 <= nuQ <= n/2");
  need(lambdas.size() == m && alphas.size() == m && ks.size() == m, "lambdas, alphas, ks have length M");
  for (std::size_t i = 0; i < m; ++i) {
    need(lambdas[i].sign() >= 0, "lambda_" + std::to_string(i + 1) + " >= 0");
    need(alphas[i] <= Rational(2) * sq(n), "alpha_" + std::to_string(i + 1) + " <= 2 n^2");
    need(ks[i].sign() >= 0, "k_" + std::to_string(i + 1) + " >= 0");
  }
  need(c0l0.sign() >= 0 && c0l0 < Rational(4) * gamma * sq(n), "0 <= c0l0 < 4 gamma n^2");
}

bool DegreeProfile::dominated() const {
  for (std::size_t i = 0; i < bound.size(); ++i)
    if (!(beta_plus_dv[i].hi < bound[i])) return false;
  return true;
}

Rational degree_bound(const LadderState& s, int level) {
  const Rational n2 = sq(s.n), l1 = s.lambdas.at(0);
  Rational first = Rational(2) * n2 - Rational(2) * sq(l1) + Rational(4) * n2 * s.gamma;
  if (level == 1) return first;
  Rational b = Rational(level - 1) * first + Rational(4 * s.delta) * n2 * s.gamma;
  for (int i = 2; i <= level; ++i) {
    const Rational& li = s.lambdas.at(static_cast<std::size_t>(i - 1));
    b = b + Rational(2) * n2 - sq(li) - Rational(2) * l1 * li;
  }
  return b;
}

DegreeProfile vertical_degrees(const LadderState& s) {
  s.validate();
  DegreeProfile p;
  const Rational drop = s.n - Rational(2) * s.nuQ;
  const Rational l1 = s.lambdas[0];
  Rational S1 = s.alphas[0] + s.c0l0 - l1 * drop - Rational(2) * sq(l1) - s.ks[0];
  p.beta_plus_dv.push_back({S1, S1});
  for (int i = 2; i <= s.M; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    const Rational& li = s.lambdas[k];
    const Rational tail = li * drop + Rational(2) * l1 * li + sq(li);
    const Interval& prev = p.beta_plus_dv.back();
    if (i == 2) {
      Rational v = s.alphas[k] + Rational(s.delta) * s.c0l0 + S1 - tail;
      p.beta_plus_dv.push_back({v, v});
    } else {
      // d_v + (beta - d_h) at level i-1 lies in [0, beta + d_v].
      Rational base = s.alphas[k] + S1 - tail;
      p.beta_plus_dv.push_back({base, base + prev.hi});
    }
  }
  for (int i = 1; i <= s.M; ++i) p.bound.push_back(degree_bound(s, i));
  return p;
}

Rational multiplicity_bounds(const LadderState& s, Centre) {
  const Rational n2 = sq(s.n), l1 = s.lambdas.at(0);
  if (s.M == 1) return Rational(2) * n2 - Rational(2) * sq(l1) + Rational(4) * n2 * s.gamma;
  Rational b = Rational(4 * (s.M - 1 + s.delta)) * n2 * s.gamma;
  for (int i = 2; i <= s.M; ++i) {
    const Rational& li = s.lambdas.at(static_cast<std::size_t>(i - 1));
    b = b + Rational(4) * n2 - Rational(2) * sq(l1) - sq(li) - Rational(2) * l1 * li;
  }
  return b;
}

LogPullback log_pullback_coefficients(int M, int delta, const Rational& n, const Rational& gamma,
                                      const std::vector<Rational>& lambdas) {
  if (lambdas.size() != static_cast<std::size_t>(M)) throw LadderError("need M multiplicities");
  if (n.sign() <= 0 || gamma.sign() <= 0) throw LadderError("n and gamma must be positive");
  LogPullback out;
  const Rational l1 = lambdas[0];
  out.coefficients.push_back((n - l1) / n + gamma);
  Rational run(0);
  for (int i = 2; i <= M; ++i) {
    run = run + Rational(2) * n - l1 - lambdas[static_cast<std::size_t>(i - 1)];
    out.coefficients.push_back(run / n + Rational(i - 1 + delta) * gamma);
  }
  out.coefficients.push_back(gamma);

  // Multiplicity of the linear system along E^(i): lambda_i plus the values of the divisors containing L_(i-1).
  TowerReport tower = tower_verify(M, delta);
  std::vector<Rational> mu;
  for (int i = 1; i <= M; ++i) {
    const TowerLevel& prev = tower.levels[static_cast<std::size_t>(i - 1)];
    Rational m = lambdas[static_cast<std::size_t>(i - 1)];
    for (std::size_t j = 0; j < prev.contains.size(); ++j)
      if (prev.contains[j]) m = m + mu[j];
    mu.push_back(m);
    out.trace.push_back("mult of M along E" + std::to_string(i) + " = " + m.str());
  }
  const TowerLevel& top = tower.levels.back();
  for (int j = 1; j <= M; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    // sigma^*(K + M/n - gamma F) = K_M + M^(M)/n - sum b_j E^(j,M) - gamma F^(M)
    Rational b = Rational(top.discrepancy[k]) - mu[k] / n + gamma * top.nu_F[k];
    out.rederived.push_back(b);
    out.trace.push_back("E^(" + std::to_string(j) + "," + std::to_string(M) + "): discrepancy " +
                        std::to_string(top.discrepancy[k]) + ", nu_F " + top.nu_F[k].str() + ", coefficient " + b.str());
  }
  out.rederived.push_back(gamma);
  out.agree = out.rederived == out.coefficients;
  return out;
}

}  // namespace dp2
