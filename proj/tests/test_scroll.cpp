#include <algorithm>

#include "doctest.h"
#include "dp2/polycore/random.hpp"
#include "dp2/scroll/scroll.hpp"
#include "oracles.hpp"

using namespace dp2;

namespace {

ScrollWeights random_weights(Rng& rng) {
  ScrollWeights w;
  w.a = rng.uniform(0, 4);
  w.b = rng.uniform(w.a, 6);
  w.c = rng.uniform(-3, 8);
  w.ell = rng.uniform(2 * w.c, 2 * w.c + 8);
  return w;
}

long at(const WeightMatrix& m, int row, const char* col) { return m.rows()[row][m.column(col)]; }

}  // namespace

TEST_CASE("main scroll and enlarged matrices") {
  ScrollWeights w{1, 2, 5, 13};
  auto m = WeightMatrix::main_scroll(w);
  CHECK(m.base() == std::vector<long>{1, 1, 0, 1, 2, 5});
  CHECK(m.fiber() == std::vector<long>{0, 0, 1, 1, 1, 2});
  auto e = WeightMatrix::enlarged(w, 1);
  CHECK(e.base() == std::vector<long>{1, 1, 0, 1, 2, 6, 7});
  CHECK(e.columns().back() == "s");
  CHECK_THROWS(WeightMatrix({"x", "y"}, {std::vector<long>{1, 1}, std::vector<long>{0}}, 1, {"x"}, {"y"}));
  CHECK_THROWS(WeightMatrix({"x", "y"}, {std::vector<long>{1, 1}, std::vector<long>{0, 1}}, 1, {"x"}, {"x"}));
}

TEST_CASE("well_form leaves the normal form alone") {
  ScrollWeights w{0, 1, 3, 7};
  auto r = well_form(WeightMatrix::main_scroll(w));
  CHECK(r.main_shape);
  CHECK(r.divisor == 1);
  CHECK(r.weights.a == 0);
  CHECK(r.weights.b == 1);
  CHECK(r.weights.c == 3);
  CHECK(r.matrix == WeightMatrix::main_scroll(w));
}

TEST_CASE("well_form rejects degenerate matrices") {
  auto cols = scroll_vars();
  CHECK_THROWS(well_form(WeightMatrix(cols, {std::vector<long>{0, 0, 1, 1, 1, 2}, std::vector<long>{0, 0, 2, 2, 2, 4}}, 1,
                                      {"u", "v"}, {"x", "y", "z", "w"})));
  CHECK_THROWS(well_form(WeightMatrix(cols, {std::vector<long>{1, 1, 0, 0, 1, 2}, std::vector<long>{0, 0, 1, 2, 1, 2}}, 1,
                                      {"u", "v"}, {"x", "y", "z", "w"})));
}

// Property: row operations, fiber-variable shuffles and a row swap are undone.
TEST_CASE("well_form recovers the weights") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    ScrollWeights w = random_weights(rng);
    auto base = WeightMatrix::main_scroll(w);
    long scale = rng.uniform(1, 3) * (rng.coin() ? 1 : -1);
    long shift = rng.uniform(-5, 5);
    std::vector<long> B(6), F = base.fiber();
    for (int i = 0; i < 6; ++i) B[i] = scale * base.base()[i] + shift * F[i];
    VarList cols = scroll_vars();
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    for (int i = 4; i > 2; --i) std::swap(perm[i], perm[rng.uniform(2, i)]);
    VarList pc(6);
    std::vector<long> pb(6), pf(6);
    for (int i = 0; i < 6; ++i) {
      pc[i] = cols[perm[i]];
      pb[i] = B[perm[i]];
      pf[i] = F[perm[i]];
    }
    bool swapped = rng.coin();
    std::array<std::vector<long>, 2> rows = swapped ? std::array<std::vector<long>, 2>{pf, pb}
                                                    : std::array<std::vector<long>, 2>{pb, pf};
    WeightMatrix in(pc, rows, swapped ? 0 : 1, {"u", "v"}, {"x", "y", "z", "w"});
    auto r = well_form(in);
    CAPTURE(w.str());
    CHECK(r.main_shape);
    CHECK(r.weights.a == w.a);
    CHECK(r.weights.b == w.b);
    CHECK(r.weights.c == w.c);
    CHECK(r.divisor == std::abs(scale));
    int br = 1 - r.matrix.fiber_row(), fr = r.matrix.fiber_row();
    for (const auto& name : cols) {
      int j = in.column(name);
      Rational lhs = r.witness[br][br] * Rational(in.rows()[br][j]) + r.witness[br][fr] * Rational(in.rows()[fr][j]);
      CHECK(lhs == Rational(at(r.matrix, br, name.c_str())));
      CHECK(at(r.matrix, fr, name.c_str()) == at(in, fr, name.c_str()));
    }
  }
}

TEST_CASE("canonical class by adjunction") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    ScrollWeights w = random_weights(rng);
    auto kt = oracle::canonical(oracle::main_scroll(w));
    DivisorClass k = canonical_class(w);
    CHECK(k.m == kt.first + 4);
    CHECK(k.f == kt.second + w.ell);
  }
  CHECK(canonical_class(ScrollWeights{0, 0, 0, 4}) == DivisorClass{-1, 2});
}

TEST_CASE("membership of equations") {
  ScrollWeights w{0, 0, 0, 2};
  auto m = WeightMatrix::main_scroll(w);
  const auto& vars = scroll_vars();
  Bidegree d{2, 4};
  auto ok = validate_membership(parse_poly("u*v*w^2 + u^2*x^4 + v^2*y^4 + (u - v)^2*z^4", vars), m, d);
  CHECK(ok.status == MembershipReport::Status::accept);
  CHECK(ok.degree == d);

  auto warn = validate_membership(parse_poly("u^2*x^4 + v^2*y^4 + u^2*w*x^2", vars), m, d);
  CHECK(warn.status == MembershipReport::Status::warn);

  auto bad = validate_membership(parse_poly("u*v*w^2 + u^2*x^4 + v^2*y^4 + u*z^4", vars), m, d);
  CHECK(bad.status == MembershipReport::Status::reject);
  REQUIRE(bad.offending.size() == 1);
  CHECK(bad.offending[0] == "u*z^4");

  auto wrong = validate_membership(parse_poly("u*w^2 + u*x^4", vars), m, d);
  CHECK(wrong.status == MembershipReport::Status::reject);
  CHECK(wrong.degree == Bidegree{1, 4});

  CHECK(validate_membership(MultiPoly(vars), m, d).status == MembershipReport::Status::reject);
  CHECK_THROWS(validate_membership(parse_poly("s", {"s"}), m, d));
}
