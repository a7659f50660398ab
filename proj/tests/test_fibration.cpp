#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "dp2/fibration/fibration.hpp"
#include "oracles.hpp"

using namespace dp2;

namespace {

FibrationModel model(ScrollWeights w, const char* eq) { return {w, parse_poly(eq, scroll_vars()), FibrationModel::Shape::hypersurface, {}}; }

MultiPoly X(const char* s) { return parse_poly(s, fiber_vars()); }

GeneralityOptions gen_opts() { return GeneralityOptions{}; }

std::set<std::string> labels(const FiberInventory& inv) {
  std::set<std::string> out;
  for (const auto& s : inv.fibers) out.insert(s.root.label());
  return out;
}

}  // namespace

TEST_CASE("status combination") {
  CHECK(combine(Status::pass, Status::pass) == Status::pass);
  CHECK(combine(Status::pass, Status::inconclusive) == Status::inconclusive);
  CHECK(combine(Status::inconclusive, Status::fail) == Status::fail);
  CHECK(combine(Status::fail, Status::pass) == Status::fail);
}

TEST_CASE("decompose and reassemble") {
  auto m = model({0, 0, 0, 2}, "u*v*w^2 + (x + y)*u*w + u^2*x^4 + v^2*z^4");
  auto d = decompose(m);
  CHECK_FALSE(d.degenerate);
  CHECK(d.f == parse_poly("u*v", scroll_vars()));
  CHECK(d.q == parse_poly("u*x + u*y", scroll_vars()));
  CHECK(d.r == parse_poly("u^2*x^4 + v^2*z^4", scroll_vars()));
  CHECK(reassemble(d) == m.equation);
  CHECK_THROWS_AS(decompose(model({0, 0, 0, 2}, "w^3*x + u^2*x^4")), MalformedInput);
  CHECK(decompose(model({0, 0, 0, 2}, "u^2*x^4 + v^2*y^4")).degenerate);
  FibrationModel wrong_ring = model({0, 0, 0, 2}, "x^4");
  wrong_ring.equation = parse_poly("x^4", fiber_vars());
  CHECK_THROWS_AS(decompose(wrong_ring), MalformedInput);
}

TEST_CASE("singular fiber inventory") {
  auto inv = singular_fibers(model({0, 0, 0, 3}, "(u^2*v - u*v^2)*w^2 + u^3*x^4 + v^3*y^4 + (u + v)^3*z^4"));
  CHECK(inv.N == 3);
  CHECK(inv.squarefree);
  CHECK(labels(inv) == std::set<std::string>{"(0:1)", "(1:0)", "(1:1)"});
  for (const auto& s : inv.fibers) CHECK(s.root.multiplicity == 1);

  auto dbl = singular_fibers(model({0, 0, 0, 2}, "u^2*w^2 + u^2*x^4 + v^2*y^4 + v^2*z^4"));
  CHECK_FALSE(dbl.squarefree);
  REQUIRE(dbl.fibers.size() == 1);
  CHECK(dbl.fibers[0].root.multiplicity == 2);
  CHECK(dbl.fibers[0].root.label() == "(0:1)");

  auto irr = singular_fibers(model({0, 0, 0, 2}, "(u^2 + v^2)*w^2 + u^2*x^4 + v^2*y^4 + u*v*z^4"));
  REQUIRE(irr.fibers.size() == 1);
  CHECK(irr.fibers[0].root.kind == RootClass::Kind::factor);
  CHECK(irr.fibers[0].root.degree == 2);
}

TEST_CASE("specialize to a fiber") {
  MultiPoly p = parse_poly("u*x^2 + v*y^2 + (u - v)*z^2", scroll_vars());
  CHECK(specialize(p, Rational(1), Rational(1)) == X("x^2 + y^2"));
  CHECK(specialize(p, Rational(0), Rational(1)) == X("y^2 - z^2"));
}

TEST_CASE("quadric determinant") {
  CHECK(quadric_det(X("x^2 + y^2 + z^2")) == Rational(1));
  CHECK(quadric_det(X("x*z - y^2")) == Rational(1, 4));
  CHECK(quadric_det(X("x^2 + 2*x*y + y^2")) == Rational(0));
}

TEST_CASE("chart generators") {
  auto charts = quasi_smooth_charts();
  CHECK(charts.size() == 8);
  MultiPoly e = parse_poly("u*w^2 + v*x^4", scroll_vars());
  auto gens = chart_generators(e, "u", "x");
  REQUIRE(gens.size() == 5);
  CHECK(gens[0] == parse_poly("w^2 + v", scroll_vars()));
}

TEST_CASE("quasi-smoothness against brute force on handcrafted models") {
  GroebnerOptions opts;
  auto models = corpus::diagonal_models();
  for (std::size_t i = 0; i < models.size(); i += 3) {
    const auto& h = models[i];
    CAPTURE(h.name);
    auto rep = quasi_smooth(h.model, opts);
    auto brute = oracle::brute_singular(h.model.equation, 101);
    CHECK((rep.status == Status::fail) == h.singular);
    CHECK((brute.singular > 0) == h.singular);
    CHECK(rep.offending_chart.has_value() == h.singular);
  }
}

TEST_CASE("the small quartic example is singular off F_101") {
  auto m = model({0, 0, 0, 1}, "u*w^2 + v*w^2 + u*x^4 + v*y^4 + u*z^4");
  GroebnerOptions opts;
  auto rep = quasi_smooth(m, opts);
  CHECK(rep.status == Status::fail);
  CHECK(oracle::brute_singular(m.equation, 101).singular == 0);
  auto b113 = oracle::brute_singular(m.equation, 113);
  CHECK(b113.singular == 4);
  CHECK(b113.first == "(0,1,1,0,18,0)");
}

TEST_CASE("quasi_smooth serial and parallel agree") {
  GroebnerOptions opts;
  for (const auto& h : corpus::diagonal_models()) {
    if (h.model.weights.ell > 3) continue;
    auto s = quasi_smooth_serial(h.model, opts);
    auto p = quasi_smooth(h.model, opts);
    CHECK(s.status == p.status);
    REQUIRE(s.charts.size() == p.charts.size());
    for (std::size_t i = 0; i < s.charts.size(); ++i) CHECK(s.charts[i].report.verdict == p.charts[i].report.verdict);
  }
}

TEST_CASE("exhausted budget is inconclusive") {
  GroebnerOptions opts;
  opts.step_budget = 2;
  auto rep = quasi_smooth(corpus::diagonal_models().front().model, opts);
  CHECK(rep.status == Status::inconclusive);
}

TEST_CASE("generality of explicit fiber forms") {
  auto ok = generality_forms(X("x^2 + y^2 + z^2"), X("x^4 + 2*y^4 + 3*z^4"), gen_opts(), 1);
  CHECK(ok.g1.status == Status::pass);
  CHECK(ok.g2.status == Status::pass);
  CHECK(ok.g3.status == Status::pass);
  CHECK(ok.resultant_degree == 8);

  auto rank = generality_forms(X("x^2"), X("x^4 + 2*y^4 + 3*z^4"), gen_opts(), 1);
  CHECK(rank.g1.status == Status::fail);
  CHECK(rank.overall == Status::fail);

  auto shared = generality_forms(X("x^2 + y^2 + z^2"), X("(x^2 + y^2 + z^2)^2"), gen_opts(), 1);
  CHECK(shared.g1.status == Status::pass);
  CHECK(shared.g2.status == Status::fail);

  auto zero = generality_forms(MultiPoly(fiber_vars()), X("x^4"), gen_opts(), 1);
  CHECK(zero.overall == Status::fail);
  CHECK_THROWS_AS(generality_forms(X("x"), X("x^4"), gen_opts(), 1), MalformedInput);
}

TEST_CASE("generality over a prime field matches the rational run") {
  auto q = reduce_mod(X("x^2 + y^2 + z^2"), 65521);
  auto r = reduce_mod(X("x^4 + 2*y^4 + 3*z^4"), 65521);
  auto rep = generality_forms(q, r, gen_opts(), 1);
  CHECK(rep.overall == Status::pass);
  CHECK(rep.fields.front() == "F_65521");
}

TEST_CASE("generality verdicts against point counts") {
  auto cases = corpus::conic_fibers();
  for (std::size_t i = 0; i < cases.size(); i += 4) {
    const auto& c = cases[i];
    CAPTURE(c.name);
    auto parts = decompose(c.model);
    auto inv = singular_fibers(c.model);
    auto it = std::find_if(inv.fibers.begin(), inv.fibers.end(),
                           [](const SingularFiber& s) { return s.root.label() == "(0:1)"; });
    REQUIRE(it != inv.fibers.end());
    auto rep = generality_check(*it, parts, gen_opts());
    bool eight = oracle::count_points(it->q_bar, it->r_bar, 100003) == 8 &&
                 oracle::count_points(it->q_bar, it->r_bar, 100019) == 8;
    CHECK((rep.g2.status == Status::pass) == eight);
    CHECK(eight == (c.expected_points == 8));
  }
}
