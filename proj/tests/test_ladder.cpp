#include "doctest.h"
#include "dp2/ladder/ladder.hpp"
#include "dp2/polycore/random.hpp"

using namespace dp2;

namespace {

LadderState state(int M, int delta, Rational n, Rational gamma) {
  LadderState s;
  s.M = M;
  s.delta = delta;
  s.n = n;
  s.gamma = gamma;
  s.nuQ = n / Rational(2);
  s.lambdas.assign(static_cast<std::size_t>(M), Rational(0));
  s.alphas.assign(static_cast<std::size_t>(M), Rational(0));
  s.ks.assign(static_cast<std::size_t>(M), Rational(0));
  return s;
}

MultiPoly C(const char* text, int M) { return parse_poly(text, certificate_ring(M)); }

}  // namespace

TEST_CASE("tower classes pair linearly") {
  auto d = TowerClass::div(2, {{"K0", Rational(1)}, {"E1", Rational(2)}});
  auto e = TowerClass::div(2, {{"E1", Rational(-2)}, {"F0", Rational(1)}});
  auto sum = d + e;
  CHECK(sum.divisor.at("K0") == Rational(1));
  CHECK(sum.is_divisor());
  auto c = TowerClass::cur(2, {{"l0", Rational(1)}});
  CHECK_FALSE(c.is_divisor());
  CHECK(pair(d.scaled(Rational(3)), c) == Rational(3) * pair(d, c));
  CHECK(pair(d + e, c) == pair(d, c) + pair(e, c));
}

TEST_CASE("tower levels match the ladder theorem") {
  for (int delta : {0, 1}) {
    auto rep = tower_verify(10, delta);
    CHECK(rep.ok());
    REQUIRE(rep.levels.size() == 11);
    CHECK(rep.levels[1].m == 0);
    CHECK(rep.levels[1].shift == Rational(-1));
    CHECK(rep.levels[1].nu_F.back() == Rational(1));
    for (int i = 2; i <= 10; ++i) {
      const auto& lv = rep.levels[static_cast<std::size_t>(i)];
      CAPTURE(i);
      CHECK(lv.m == 1);
      CHECK(lv.shift == Rational(0));
      CHECK(lv.contains.at(0));
      CHECK_FALSE(lv.F_contains);
      CHECK(lv.nu_F.back() == Rational(i - 1 + delta));
      if (i >= 3) {
        CHECK_FALSE(lv.contains.at(static_cast<std::size_t>(i - 2)));
        CHECK(pair(lv.E.at(static_cast<std::size_t>(i - 2)), lv.L) == Rational(0));
      }
      CHECK(pair(lv.E.at(0), lv.L) == Rational(-1));
      CHECK(pair(lv.E.back(), lv.L) == Rational(0));
    }
    CHECK(pair(rep.levels[1].E.at(0), rep.levels[1].L) == Rational(-1));
    for (const auto& item : rep.checks) {
      CAPTURE(item.name);
      CHECK(item.ok);
    }
  }
  CHECK(tower_verify(5, 0).levels[5].nu_F.back() == Rational(4));
  CHECK(tower_verify(5, 1).levels[5].nu_F.back() == Rational(5));
  CHECK_THROWS_AS(tower_verify(0, 0), LadderError);
  CHECK_THROWS_AS(tower_verify(2, 2), LadderError);
}

TEST_CASE("vertical degree examples") {
  LadderState s = state(1, 0, Rational(1), Rational(1));
  s.lambdas[0] = Rational(1);
  s.alphas[0] = Rational(2);
  auto p = vertical_degrees(s);
  CHECK(p.beta_plus_dv[0].lo == Rational(0));
  CHECK(p.beta_plus_dv[0].hi == Rational(0));
  CHECK(p.dominated());

  LadderState edge = state(1, 0, Rational(1), Rational(1, 3));
  edge.alphas[0] = Rational(2);
  edge.c0l0 = Rational(4, 3) - Rational(1, 1000);
  auto q = vertical_degrees(edge);
  CHECK(q.bound[0] - q.beta_plus_dv[0].hi == Rational(1, 1000));
}

TEST_CASE("ladder state validation") {
  LadderState s = state(2, 0, Rational(1), Rational(1));
  CHECK_NOTHROW(s.validate());
  s.nuQ = Rational(1);
  CHECK_THROWS_AS(s.validate(), LadderError);
  s = state(2, 0, Rational(1), Rational(1));
  s.alphas[1] = Rational(3);
  CHECK_THROWS_AS(s.validate(), LadderError);
  s = state(2, 0, Rational(1), Rational(1));
  s.c0l0 = Rational(4);
  CHECK_THROWS_AS(s.validate(), LadderError);
  s = state(2, 0, Rational(1), Rational(1));
  s.ks.pop_back();
  CHECK_THROWS_AS(vertical_degrees(s), LadderError);
}

TEST_CASE("multiplicity bound examples") {
  LadderState s = state(1, 0, Rational(1), Rational(1));
  CHECK(multiplicity_bounds(s, Centre::fiber_curve) == Rational(6));
  LadderState t = state(2, 0, Rational(1), Rational(0));
  CHECK(multiplicity_bounds(t, Centre::point_off_section) == Rational(4));
}

TEST_CASE("multiplicity bound is nonincreasing in each lambda") {
  for (int M = 1; M <= 4; ++M)
    for (int idx = 0; idx < M; ++idx) {
      LadderState s = state(M, M == 1 ? 0 : 1, Rational(3), Rational(1, 2));
      Rational prev = multiplicity_bounds(s, Centre::fiber_curve);
      for (int step = 1; step <= 12; ++step) {
        s.lambdas[static_cast<std::size_t>(idx)] = Rational(step, 4);
        Rational cur = multiplicity_bounds(s, Centre::fiber_curve);
        CHECK(cur <= prev);
        prev = cur;
      }
    }
}

TEST_CASE("log pullback coefficients") {
  auto one = log_pullback_coefficients(1, 0, Rational(2), Rational(1, 3), {Rational(1, 2)});
  REQUIRE(one.coefficients.size() == 2);
  CHECK(one.coefficients[0] == Rational(3, 4) + Rational(1, 3));
  CHECK(one.agree);

  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    int M = static_cast<int>(rng.uniform(1, 8)), delta = rng.coin() ? 1 : 0;
    Rational n(rng.uniform(1, 9), rng.uniform(1, 3)), g(rng.uniform(1, 9), rng.uniform(1, 9));
    std::vector<Rational> l;
    for (int i = 0; i < M; ++i) l.emplace_back(rng.uniform(0, 9), rng.uniform(1, 4));
    auto lp = log_pullback_coefficients(M, delta, n, g, l);
    CHECK(lp.agree);
    REQUIRE(lp.coefficients.size() == static_cast<std::size_t>(M + 1));
    CHECK(lp.coefficients.back() == g);
    for (int i = 3; i <= M; ++i) {
      auto k = static_cast<std::size_t>(i - 1);
      CHECK(lp.coefficients[k] - lp.coefficients[k - 1] == (Rational(2) * n - l[0] - l[k]) / n + g);
    }
    if (M >= 2) {
      auto other = log_pullback_coefficients(M, 1 - delta, n, g, l);
      CHECK(other.coefficients[0] == lp.coefficients[0]);
      for (int i = 2; i <= M; ++i) {
        auto k = static_cast<std::size_t>(i - 1);
        CHECK((other.coefficients[k] - lp.coefficients[k]).abs() == g);
      }
    }
  }
}

TEST_CASE("certificate identities") {
  auto a1 = contradiction_certificate(Case::A1, 1, 0);
  CHECK(a1.identity_holds);
  CHECK(a1.certificate == C("2*(n - l1)^2", 1));

  auto a3 = contradiction_certificate(Case::A, 3, 0);
  CHECK(a3.identity_holds);
  CHECK(a3.sos_ok);
  CHECK(a3.certificate == C("2*l1^2 + (2*n - l1 - l2)^2 + (2*n - l1 - l3)^2", 3));

  for (Case c : {Case::A1, Case::A, Case::B2F, Case::B, Case::C})
    for (int M = 1; M <= 8; ++M)
      for (int delta : {0, 1}) {
        if (!case_admits(c, M, delta)) {
          CHECK_THROWS_AS(contradiction_certificate(c, M, delta), LadderError);
          continue;
        }
        auto cert = contradiction_certificate(c, M, delta);
        CAPTURE(to_string(c));
        CAPTURE(M);
        CHECK(cert.identity_holds);
        CHECK(cert.residual.is_zero());
        CHECK(cert.sos_ok);
        CHECK(cert.chain.strict());
      }
}

TEST_CASE("printed case B form differs from the exact one") {
  auto b = contradiction_certificate(Case::B, 3, 0);
  REQUIRE(b.printed.has_value());
  CHECK_FALSE(b.printed_residual->is_zero());
  CHECK(b.identity_holds);
}

TEST_CASE("case names") {
  for (Case c : {Case::A1, Case::A, Case::B2F, Case::B, Case::C}) CHECK(parse_case(to_string(c)) == c);
  CHECK_THROWS_AS(parse_case("D"), LadderError);
  CHECK(case_admits(Case::B2F, 2, 1));
  CHECK_FALSE(case_admits(Case::B2F, 3, 1));
  CHECK_FALSE(case_admits(Case::C, 1, 0));
}

TEST_CASE("structural sum of squares check") {
  VarList R = certificate_ring(1);
  MultiPoly base = parse_poly("n - l1", R);
  std::string why;
  CHECK(sos_structural({{Rational(2), {"t"}, base}}, &why));
  CHECK_FALSE(sos_structural({{Rational(-1), {}, base}}, &why));
  CHECK(why.find("non-positive") == 0);
  CHECK_FALSE(sos_structural({{Rational(1), {"n"}, base}}, &why));
  CHECK_FALSE(sos_structural({{Rational(1), {}, MultiPoly(R)}}, &why));
}

TEST_CASE("side evaluation agrees with the certificate polynomial") {
  for (Case c : {Case::A1, Case::A, Case::B2F, Case::B, Case::C}) {
    auto r = fuzz_case_serial(c, 400, 3, 6);
    CHECK(r.samples == 400);
    CHECK(r.feasible == 0);
    CHECK(r.identity_misses == 0);
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("fuzz and dominance serial and parallel agree") {
  for (Case c : {Case::A, Case::C}) {
    auto s = fuzz_case_serial(c, 500, 9, 5);
    auto p = fuzz_case(c, 500, 9, 5);
    CHECK(s.feasible == p.feasible);
    CHECK(s.identity_misses == p.identity_misses);
  }
  CHECK(dominance_violations_serial(2000, 4, 6) == dominance_violations(2000, 4, 6));
  CHECK(dominance_violations(2000, 4, 6) == 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK_NOTHROW(random_state(seed, 6).validate());
}
