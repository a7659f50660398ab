#include <sstream>

#include "dp2/ladder/ladder.hpp"

namespace dp2 {

namespace {

void accumulate(std::map<std::string, Rational>& into, const std::map<std::string, Rational>& from, const Rational& k) {
  for (const auto& [key, v] : from) {
    Rational nv = into[key] + v * k;
    if (nv.is_zero()) {
      into.erase(key);
    } else {
      into[key] = nv;
    }
  }
}

std::string combo(const std::map<std::string, Rational>& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [key, v] : m) {
    if (!out.empty()) out += v.sign() < 0 ? " - " : " + ";
    else if (v.sign() < 0) out += "-";
    Rational a = v.abs();
    if (!a.is_one()) out += a.str() + "*";
    out += key;
  }
  return out;
}

std::string E(int j) { return "E" + std::to_string(j); }
std::string f(int j) { return "f" + std::to_string(j); }

Rational axiom(const std::string& d, const std::string& c) {
  if (c == "l0") {
    if (d == "K0") return Rational(0);
    if (d == "F0") return Rational(-1);
    if (d == "EQ") return Rational(1);
    return Rational(0);
  }
  if (d.size() > 1 && d[0] == 'E' && d != "EQ" && c[0] == 'f' && d.substr(1) == c.substr(1)) return Rational(-1);
  return Rational(0);
}

TowerClass pull(const TowerClass& c) {
  TowerClass r = c;
  ++r.level;
  return r;
}

Rational surface_pair(const SurfaceClass& a, const SurfaceClass& b, int m) {
  return Rational(-m) * a.cL * b.cL + a.cL * b.cf + a.cf * b.cL;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

TowerClass TowerClass::operator+(const TowerClass& o) const {
  TowerClass r = *this;
  accumulate(r.divisor, o.divisor, Rational(1));
  accumulate(r.curve, o.curve, Rational(1));
  return r;
}

TowerClass TowerClass::operator-(const TowerClass& o) const {
  TowerClass r = *this;
  accumulate(r.divisor, o.divisor, Rational(-1));
  accumulate(r.curve, o.curve, Rational(-1));
  return r;
}

TowerClass TowerClass::scaled(const Rational& k) const {
  TowerClass r{level, {}, {}};
  accumulate(r.divisor, divisor, k);
  accumulate(r.curve, curve, k);
  return r;
}

std::string TowerClass::str() const { return is_divisor() ? combo(divisor) : combo(curve); }

std::string SurfaceClass::str() const {
  std::map<std::string, Rational> m;
  if (!cL.is_zero()) m["L"] = cL;
  if (!cf.is_zero()) m["f"] = cf;
  return combo(m);
}

Rational pair(const TowerClass& d, const TowerClass& c) {
  if (d.level != c.level) throw LadderError("pairing classes from levels " + std::to_string(d.level) + " and " +
                                            std::to_string(c.level));
  Rational s(0);
  for (const auto& [dk, dv] : d.divisor)
    for (const auto& [ck, cv] : c.curve) s = s + dv * cv * axiom(dk, ck);
  return s;
}

bool TowerReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

namespace {

struct Builder {
  TowerReport rep;

  void check(const std::string& name, const std::string& expected, const std::string& derived) {
    rep.checks.push_back({name, expected, derived, expected == derived});
  }
  void check(const std::string& name, const Rational& expected, const Rational& derived) {
    check(name, expected.str(), derived.str());
  }
  void note(std::string s) { rep.trace.push_back(std::move(s)); }

  // D = pull(D') + e * Ehat_i restricted to E^(i), as a class in (L_i, f_i).
  SurfaceClass restrict_top(const TowerLevel& prev, const TowerLevel& cur, const TowerClass& D) {
    const std::string top = E(cur.i);
    Rational e = D.divisor.count(top) ? D.divisor.at(top) : Rational(0);
    TowerClass lower = D;
    lower.divisor.erase(top);
    lower.level = prev.i;
    Rational base = pair(lower, prev.L);
    return {-e, e * (cur.deg_normal - cur.shift) + base};
  }

  // Containment of L_i in a divisor of level i other than E^(i); nullopt when undecided.
  std::optional<bool> contains(const SurfaceClass& R, const TowerLevel& cur) {
    SurfaceClass L{Rational(1), Rational(0)};
    Rational x = surface_pair(R, L, cur.m);
    if (x.sign() < 0) return true;
    if (x.is_zero() && R == L && cur.m == 0) return std::nullopt;
    return false;
  }

  // Coefficients c_j with target = sum c_j E^(j,i) on the exceptional part.
  std::vector<Rational> in_proper_basis(const TowerClass& target, const TowerLevel& lev) {
    std::vector<Rational> c(static_cast<std::size_t>(lev.i), Rational(0));
    for (int k = 1; k <= lev.i; ++k) {
      Rational t = target.divisor.count(E(k)) ? target.divisor.at(E(k)) : Rational(0);
      for (int j = 1; j < k; ++j) {
        const auto& d = lev.E[static_cast<std::size_t>(j - 1)].divisor;
        if (d.count(E(k))) t = t - c[static_cast<std::size_t>(j - 1)] * d.at(E(k));
      }
      c[static_cast<std::size_t>(k - 1)] = t;
    }
    for (const auto& key : {"K0", "F0", "EQ"})
      if (target.divisor.count(key)) throw LadderError("class is not exceptional: " + target.str());
    return c;
  }

  TowerLevel level0() {
    TowerLevel z;
    z.i = 0;
    z.L = TowerClass::cur(0, {{"l0", Rational(1)}});
    z.K = TowerClass::div(0, {{"K0", Rational(1)}});
    z.F = TowerClass::div(0, {{"F0", Rational(1)}});
    z.F_contains = true;
    note("level 0: axioms L0.EQ = 1, L0.F0 = -1, L0.K = 0");
    check("L0.EQ", Rational(1), pair(TowerClass::div(0, {{"EQ", Rational(1)}}), z.L));
    check("L0.F0", Rational(-1), pair(z.F, z.L));
    check("L0.K0", Rational(0), pair(z.K, z.L));
    return z;
  }

  TowerLevel next(const TowerLevel& p, int delta) {
    TowerLevel c;
    c.i = p.i + 1;
    const int i = c.i;
    const std::string tag = "level " + std::to_string(i) + ": ";
    c.deg_normal = Rational(-2) - pair(p.K, p.L);
    note(tag + "deg N(L" + std::to_string(p.i) + ") = -2 - K.L = " + c.deg_normal.str());
    if (i == 1) check("deg N(L0)", Rational(-2), c.deg_normal);

    // Normal bundle splitting from a surface S containing L_(i-1): 0 -> N_(L/S) -> N -> N_(S)|L -> 0.
    const TowerClass& S = p.i == 0 ? p.F : p.E.at(0);
    if (p.i > 0 && !p.contains.at(0)) throw LadderError(tag + "L is not inside E^(1)");
    Rational q = pair(S, p.L), s = c.deg_normal - q;
    Rational gap = s - q;
    if (gap < Rational(-1)) throw LadderError(tag + "normal bundle splitting undetermined");
    if (!gap.is_integer()) throw LadderError(tag + "non-integral splitting");
    c.m = static_cast<int>(gap.abs().to_long());
    note(tag + "N = O(" + s.str() + ") + O(" + q.str() + "), so E^(" + std::to_string(i) + ") = F_" + std::to_string(c.m));
    if (i == 1) {
      check("(i) E1 = F_0", "0", std::to_string(c.m));
      check("normal bundle of L0", "O(-1) + O(-1)", "O(" + s.str() + ") + O(" + q.str() + ")");
    } else {
      check("(ii) E" + std::to_string(i) + " = F_1", "1", std::to_string(c.m));
    }

    // (sigma^* L)^2 on E equals deg N; with sigma^* L = L_i + a f and L_i^2 = -m this fixes a.
    Rational a = (c.deg_normal + Rational(c.m)) / Rational(2);
    c.shift = a;
    note(tag + "sigma^* L" + std::to_string(p.i) + " = L" + std::to_string(i) + " + (" + a.str() + ") f" +
         std::to_string(i));
    if (i == 1) {
      SurfaceClass pl{Rational(1), a};
      check("sigma1^*(L0)^2", Rational(-2), surface_pair(pl, pl, c.m));
      check("(iii) sigma1^* L0 = L1 - f1", Rational(-1), a);
    } else {
      check("(iv) sigma^* L" + std::to_string(p.i) + " = L" + std::to_string(i), Rational(0), a);
    }

    TowerClass Ehat = TowerClass::div(i, {{E(i), Rational(1)}});
    TowerClass fi = TowerClass::cur(i, {{f(i), Rational(1)}});
    c.L = pull(p.L) - fi.scaled(a);
    c.K = pull(p.K) + Ehat;
    note(tag + "L" + std::to_string(i) + " = " + c.L.str() + ", K = " + c.K.str());

    for (std::size_t j = 0; j < p.E.size(); ++j) {
      TowerClass e = pull(p.E[j]);
      if (p.contains[j]) e = e - Ehat;
      c.E.push_back(e);
    }
    c.E.push_back(Ehat);
    c.F = pull(p.F);
    if (p.F_contains) c.F = c.F - Ehat;

    for (int j = 1; j < i; ++j) {
      const TowerClass& D = c.E[static_cast<std::size_t>(j - 1)];
      auto R = restrict_top(p, c, D);
      auto in = contains(R, c);
      if (!in) throw LadderError(tag + "containment of L in E^(" + std::to_string(j) + "," + std::to_string(i) + ") undecided");
      c.contains.push_back(*in);
      note(tag + "E^(" + std::to_string(j) + "," + std::to_string(i) + ") = " + D.str() + ", restricted to E" +
           std::to_string(i) + ": " + R.str() + ", contains L: " + yes(*in));
      if (j == 1 && i >= 2) check("(v) E^(1," + std::to_string(i) + ")|E" + std::to_string(i) + " = L", "L", R.str());
      if (j == i - 1 && i >= 3)
        check("(vi) E^(" + std::to_string(j) + "," + std::to_string(i) + ")|E" + std::to_string(i) + " = L + f",
              "L + f", R.str());
    }
    c.contains.push_back(true);

    auto RF = restrict_top(p, c, c.F);
    auto inF = contains(RF, c);
    if (!inF) {
      if (i != 1) throw LadderError(tag + "containment of L in F undecided");
      inF = delta == 1;
      note(tag + "F^(1) restricted to E1 is " + RF.str() + ": contains L1 or is disjoint; delta = " + std::to_string(delta));
    }
    c.F_contains = *inF;
    note(tag + "F^(" + std::to_string(i) + ") = " + c.F.str() + ", contains L: " + yes(c.F_contains));

    // discrepancies and valuations
    c.discrepancy.assign(static_cast<std::size_t>(i), 0);
    auto disc = in_proper_basis(TowerClass::div(i, {}) + c.K - TowerClass::div(i, {{"K0", Rational(1)}}), c);
    for (int j = 0; j < i; ++j) {
      if (!disc[static_cast<std::size_t>(j)].is_integer()) throw LadderError("non-integral discrepancy");
      c.discrepancy[static_cast<std::size_t>(j)] = static_cast<int>(disc[static_cast<std::size_t>(j)].to_long());
    }
    c.nu_F = in_proper_basis(TowerClass::div(i, {{"F0", Rational(1)}}) - c.F, c);
    note(tag + "nu_E" + std::to_string(i) + "(F0) = " + c.nu_F.back().str() + ", discrepancy " +
         std::to_string(c.discrepancy.back()));

    const std::string si = std::to_string(i);
    Rational eL = pair(Ehat, c.L), kL = pair(c.K, c.L), e1L = pair(c.E[0], c.L), fL = pair(c.F, c.L);
    if (i == 1) {
      check("E1.L1", Rational(-1), eL);
      check("K1.L1", Rational(-1), kL);
      check("(vii) F^(1)|E1 = L1", "L", RF.str());
      check("(vii) F^(1).L1", Rational(0), fL);
      check("(vii) nu_E1(F0)", Rational(1), c.nu_F.back());
    } else {
      check("E" + si + ".L" + si, Rational(0), eL);
      check("K" + si + ".L" + si, Rational(-1), kL);
      check("(v) L" + si + " in E^(1," + si + ")", "yes", yes(c.contains[0]));
      check("(v) E^(1," + si + ").L" + si, Rational(-1), e1L);
      if (i >= 3) {
        check("(vi) E^(" + std::to_string(i - 1) + "," + si + ").L" + si, Rational(0),
              pair(c.E[static_cast<std::size_t>(i - 2)], c.L));
        check("(vi) L" + si + " not in E^(" + std::to_string(i - 1) + "," + si + ")", "no",
              yes(c.contains[static_cast<std::size_t>(i - 2)]));
      }
      check("(viii) F^(" + si + ").L" + si, Rational(0), fL);
      check("(viii) L" + si + " not in F^(" + si + ")", "no", yes(c.F_contains));
      check("(viii) nu_E" + si + "(F0)", Rational(i - 1 + delta), c.nu_F.back());
    }
    check("discrepancy of E" + si, Rational(i == 1 ? 1 : 2 * (i - 1)), Rational(c.discrepancy.back()));
    return c;
  }
};

}  // namespace

TowerReport tower_verify(int M, int delta) {
  if (M < 1) throw LadderError("M must be at least 1");
  if (delta != 0 && delta != 1) throw LadderError("delta must be 0 or 1");
  Builder b;
  b.rep.M = M;
  b.rep.delta = delta;
  b.rep.levels.push_back(b.level0());
  for (int i = 1; i <= M; ++i) b.rep.levels.push_back(b.next(b.rep.levels.back(), delta));
  return b.rep;
}

}  // namespace dp2
