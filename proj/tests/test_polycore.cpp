#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "dp2/polycore/groebner.hpp"
#include "dp2/polycore/random.hpp"
#include "dp2/polycore/resultant.hpp"
#include "dp2/polycore/univariate.hpp"

using namespace dp2;

namespace {

const VarList kXY = {"x", "y"};
const VarList kXYZ = {"x", "y", "z"};

MultiPoly P(const char* s, const VarList& v = kXYZ) { return parse_poly(s, v); }

UPoly<Rational> from_roots(const std::vector<long>& roots) {
  UPoly<Rational> p{{Rational(1)}, {}};
  for (long a : roots) p = p * UPoly<Rational>{{Rational(-a), Rational(1)}, {}};
  return p;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse(" -10/4 ").str() == "-5/2");
  CHECK_THROWS(Rational::parse("10/-4"));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("rational str round trip") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    Rational r(rng.uniform(-100000, 100000), rng.uniform(1, 999));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("prime field arithmetic") {
  const std::uint32_t p = 65521;
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    Fp a(rng.uniform(1, p - 1), p);
    CHECK((a * a.inverse()).v == 1u);
    Fp b(rng.uniform(0, p - 1), p);
    CHECK(((a + b) - b) == a);
  }
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65523));
}

TEST_CASE("polynomial arithmetic") {
  MultiPoly a = P("x + y"), b = P("x - y");
  CHECK((a * b) == P("x^2 - y^2"));
  CHECK(a.pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(P("x^2*y + 3*z").derivative(0) == P("2*x*y"));
  CHECK(P("x^2*y + 3*z").evaluate(1, Rational(2)) == P("2*x^2 + 3*z"));
  CHECK(P("(x + 1)^2 - x^2 - 2*x") == P("1"));
  CHECK(P("x*y").substitute({{"x", P("y + z")}}) == P("y^2 + y*z"));
  CHECK(P("3/2*x").str() == "3/2*x");
  CHECK_THROWS(P("x + q"));
}

TEST_CASE("grevlex order") {
  CHECK(P("x + y^2").str() == "y^2 + x");
  CHECK(P("x^2*z + x*y^2").str() == "x*y^2 + x^2*z");
  CHECK(P("x*z + y^2").str() == "y^2 + x*z");
}

TEST_CASE("embed keeps terms and rejects missing variables") {
  MultiPoly p = P("x*y - z");
  MultiPoly q = p.embed({"w", "x", "y", "z"});
  CHECK(q.size() == 2);
  CHECK(q.embed(kXYZ) == p);
  CHECK_THROWS(p.embed(kXY));
}

TEST_CASE("groebner basis of a small ideal") {
  auto run = groebner_basis(std::vector<MultiPoly>{P("x^2 + y^2 - 1", kXY), P("x - y", kXY)}, 100000, false);
  REQUIRE(run.verdict == Triviality::nontrivial);
  REQUIRE(run.basis.size() == 2);
  CHECK(run.basis[0] == P("x - y", kXY));
  CHECK(run.basis[1] == P("y^2 - 1/2", kXY));
}

TEST_CASE("triviality on both fields") {
  CHECK(buchberger_trivial({P("x"), P("x - 1")}, FieldTag{}));
  CHECK_FALSE(buchberger_trivial({P("x^2"), P("x*y")}, FieldTag{}));
  CHECK(buchberger_trivial({P("x^2 - 2"), P("x*y - 1"), P("y")}, FieldTag::modp(101)));
  CHECK_FALSE(buchberger_trivial({}, FieldTag{}));
}

// Property: ideals with a common rational zero are proper; adding x - a - 1 makes them trivial.
TEST_CASE("triviality against planted zeros") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> pt{Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-3, 3))};
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 3; ++g) {
      MultiPoly p(kXYZ);
      for (int t = 0; t < 4; ++t) {
        Exponent e{static_cast<std::uint16_t>(rng.uniform(0, 2)), static_cast<std::uint16_t>(rng.uniform(0, 2)),
                   static_cast<std::uint16_t>(rng.uniform(0, 2))};
        p.add_term(e, Rational(rng.uniform(-5, 5)));
      }
      p -= MultiPoly::constant(kXYZ, p.evaluate_all(std::span<const Rational>(pt)));
      gens.push_back(p);
    }
    GroebnerOptions opts;
    CHECK(ideal_triviality(gens, opts).verdict != Triviality::trivial);
    gens.push_back(MultiPoly::variable(kXYZ, "x") - MultiPoly::constant(kXYZ, pt[0] + Rational(1)));
    gens.push_back(MultiPoly::variable(kXYZ, "x") - MultiPoly::constant(kXYZ, pt[0]));
    CHECK(ideal_triviality(gens, opts).verdict == Triviality::trivial);
  }
}

TEST_CASE("step budget gives inconclusive") {
  GroebnerOptions opts;
  opts.step_budget = 1;
  auto rep = ideal_triviality({P("x^2 - y"), P("x*y - z"), P("y^2 - x*z + 1")}, opts);
  CHECK(rep.verdict == Triviality::inconclusive);
  CHECK(rep.note == "step budget exhausted");
}

TEST_CASE("step budget from the environment") {
  setenv("DP2_STEP_BUDGET", "1234", 1);
  CHECK(default_step_budget() == 1234u);
  unsetenv("DP2_STEP_BUDGET");
  CHECK(default_step_budget() > 1234u);
}

TEST_CASE("primes that divide a denominator are reported") {
  GroebnerOptions opts;
  opts.primes = {101, 103, 107};
  auto rep = ideal_triviality({P("1/101*x - 1"), P("y")}, opts);
  CHECK(rep.verdict == Triviality::inconclusive);
}

TEST_CASE("exact mode is not probabilistic") {
  GroebnerOptions opts;
  opts.exact = true;
  auto rep = ideal_triviality({P("x"), P("x - 1")}, opts);
  CHECK(rep.verdict == Triviality::trivial);
  CHECK_FALSE(rep.probabilistic);
}

TEST_CASE("resultant of two small polynomials") {
  const VarList xt = {"x", "t"};
  CHECK(resultant_elim(P("x^2 - t", xt), P("x - 1", xt), "x") == P("1 - t", xt));
  CHECK(resultant_elim(P("3", xt), P("5", xt), "x") == P("1", xt));
}

// Property: Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j).
TEST_CASE("resultant against root products") {
  Rng rng(5);
  const VarList xs = {"x"};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> a, b;
    for (long i = rng.uniform(1, 4); i > 0; --i) a.push_back(rng.uniform(-6, 6));
    for (long i = rng.uniform(1, 4); i > 0; --i) b.push_back(rng.uniform(-6, 6));
    MultiPoly pa = MultiPoly::from_int(xs, 1), pb = MultiPoly::from_int(xs, 1);
    Rational expect = 1;
    for (long r : a) pa *= parse_poly("x - (" + std::to_string(r) + ")", xs);
    for (long r : b) pb *= parse_poly("x - (" + std::to_string(r) + ")", xs);
    for (long r : a)
      for (long s : b) expect *= Rational(r - s);
    CHECK(resultant_elim(pa, pb, "x").constant_term() == expect);
  }
}

TEST_CASE("squarefree and rational roots") {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> roots;
    while (roots.size() < 4) {
      long a = rng.uniform(-10, 10);
      if (std::find(roots.begin(), roots.end(), a) == roots.end()) roots.push_back(a);
    }
    UPoly<Rational> p = from_roots(roots);
    auto found = rational_roots(p);
    std::sort(roots.begin(), roots.end());
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(found[i] == Rational(roots[i]));
    auto levels = squarefree_decomposition(p * UPoly<Rational>{{Rational(-roots[0]), Rational(1)}, {}});
    REQUIRE(levels.size() >= 2);
    CHECK(levels[1].degree() == 1);
  }
  CHECK(squarefree(parse_poly("u^2*v - u*v^2", {"u", "v"})).squarefree);
  CHECK_FALSE(squarefree(parse_poly("u^2*v", {"u", "v"})).squarefree);
}

TEST_CASE("roots modulo p") {
  UPoly<Rational> p = from_roots({1, 2, 50});
  auto r = roots_mod_p(reduce_mod(p, 101));
  CHECK(r == std::vector<std::uint32_t>{1, 2, 50});
}
