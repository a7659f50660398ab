#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "dp2/links/links.hpp"
#include "dp2/polycore/random.hpp"
#include "oracles.hpp"

using namespace dp2;

namespace {

MultiPoly M(const char* s) { return parse_poly(s, model_vars()); }

std::vector<int> toggle(std::vector<int> I, int j) {
  auto it = std::find(I.begin(), I.end(), j);
  if (it == I.end()) {
    I.push_back(j);
    std::sort(I.begin(), I.end());
  } else {
    I.erase(it);
  }
  return I;
}

ScrollWeights random_weights(Rng& rng, long max_n) {
  ScrollWeights w;
  w.a = rng.uniform(0, 1);
  w.b = rng.uniform(w.a, 2);
  w.c = rng.uniform(0, 4);
  w.ell = 2 * w.c + rng.uniform(1, max_n);
  return w;
}

}  // namespace

TEST_CASE("big involution on a small model") {
  FibrationModel m = corpus::random_model(1, {0, 0, 0, 2});
  auto inv = big_involution(m);
  CHECK(inv.certificate.preserves);
  CHECK(inv.certificate.involutive);
  CHECK_FALSE(inv.certificate.printed_double_residual.is_zero());
  CHECK_FALSE(inv.certificate.printed_preservation_residual.is_zero());
  CHECK_THROWS_AS(big_involution(parse_poly("0", scroll_vars()), parse_poly("x", scroll_vars()),
                                 parse_poly("y", scroll_vars())),
                  PreconditionError);
}

TEST_CASE("with q = 0 the involution is w to -w") {
  const auto& R = scroll_vars();
  auto inv = big_involution(parse_poly("u*v", R), MultiPoly(R), parse_poly("u^2*x^4 + v^2*y^4", R));
  const auto& img = inv.map.substitution.at("w");
  CHECK(img.num.scaled(Rational(-1)) == img.den * parse_poly("w", R));
  CHECK(inv.certificate.printed_double_residual.is_zero());
}

// Numeric oracle: evaluate the image at random rational points and apply it twice by hand.
TEST_CASE("involution at random points") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    FibrationModel m = corpus::random_model(100 + trial, {0, 0, 1, 4});
    auto d = decompose(m);
    auto inv = big_involution(m);
    const auto& img = inv.map.substitution.at("w");
    for (int k = 0; k < 5; ++k) {
      std::vector<Rational> pt;
      for (int i = 0; i < 6; ++i) pt.emplace_back(rng.uniform(-5, 5), rng.uniform(1, 3));
      Rational fv = d.f.evaluate_all(std::span<const Rational>(pt));
      if (fv.is_zero()) continue;
      Rational qv = d.q.evaluate_all(std::span<const Rational>(pt)), rv = d.r.evaluate_all(std::span<const Rational>(pt));
      Rational w1 = img.num.evaluate_all(std::span<const Rational>(pt)) / img.den.evaluate_all(std::span<const Rational>(pt));
      CHECK(w1 == -pt[5] - qv / fv);
      auto F = [&](const Rational& w) { return fv * w * w + qv * w + rv; };
      CHECK(F(w1) == F(pt[5]));
      CHECK(-w1 - qv / fv == pt[5]);
    }
  }
}

TEST_CASE("models over two fibers") {
  FibrationModel m = corpus::random_model(5, {0, 0, 1, 4});
  auto d = decompose(m);
  auto split = factor_split(m);
  REQUIRE(split.factors.size() == 2);
  auto models = all_models(m);
  REQUIRE(models.size() == 4);
  for (const auto& x : models) {
    CAPTURE(x.index_set.size());
    CHECK(x.eq1_homogeneous);
    CHECK(x.eq2_homogeneous);
    CHECK(x.P_I * x.P_rest == d.f.embed(model_vars()));
    CHECK(x.eq1 == x.P_I * M("s") - x.P_rest * M("w") - d.q.embed(model_vars()));
    CHECK(x.eq2 == M("s*w") + d.r.embed(model_vars()));
    CHECK(x.ambient == WeightMatrix::enlarged(m.weights, x.k));
    CHECK(x.k == static_cast<long>(x.index_set.size()));
  }
  CHECK(models[1].ambient.base()[5] == 2);
  CHECK(models[1].ambient.base()[6] == 2);
  CHECK_THROWS_AS(build_model(m, {3}), PreconditionError);
  CHECK_THROWS_AS(build_model(m, {1, 1}), PreconditionError);
}

TEST_CASE("repeated roots are refused") {
  FibrationModel m{{0, 0, 0, 2}, parse_poly("u^2*w^2 + v^2*x^4 + u^2*y^4", scroll_vars()),
                   FibrationModel::Shape::hypersurface, {}};
  CHECK_THROWS_AS(factor_split(m), PreconditionError);
}

TEST_CASE("eliminations by explicit cofactors") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    ScrollWeights w = random_weights(rng, 4);
    FibrationModel m = corpus::random_model(200 + trial, w);
    auto d = decompose(m);
    auto models = all_models(m);
    const auto& empty = models.front();
    const auto& full = models.back();
    MultiPoly F = m.equation.embed(model_vars());
    CHECK(-(M("w") * empty.eq1) + empty.eq2 == F);
    MultiPoly g = full.eq2 + M("s") * full.eq1;
    MultiPoly renamed = g.substitute({{"s", M("w")}, {"w", M("s")}}).embed(model_vars());
    MultiPoly expect = (d.f * parse_poly("w^2", scroll_vars()) - d.q * parse_poly("w", scroll_vars()) + d.r)
                           .embed(model_vars());
    CHECK(renamed == expect);
    auto e0 = eliminate_to_hypersurface(m, empty);
    CHECK(e0.matches);
    CHECK(e0.bidegree_ok);
    CHECK(e0.equation == m.equation);
    auto e1 = eliminate_to_hypersurface(m, full);
    CHECK(e1.matches);
    CHECK(e1.bidegree_ok);
    if (models.size() > 2) CHECK_THROWS_AS(eliminate_to_hypersurface(m, models[1]), PreconditionError);
  }
}

TEST_CASE("single point links") {
  Rng rng(44);
  for (int trial = 0; trial < 12; ++trial) {
    ScrollWeights w = random_weights(rng, 3);
    FibrationModel m = corpus::random_model(300 + trial, w);
    auto split = factor_split(m);
    for (int i = 1; i <= static_cast<int>(split.factors.size()); ++i) {
      auto fl = fiber_link(m, i);
      CHECK(fl.step.eq1_certified);
      CHECK(fl.step.eq2_certified);
      CHECK(same_model(fl.step.to, build_model(m, {i})));
      CHECK(fl.elimination.holds);
      CHECK_FALSE(fl.elimination.printed_residual.is_zero());
    }
  }
}

// Property: toggling j twice returns to the same model, and toggles commute.
TEST_CASE("links act by symmetric difference") {
  FibrationModel m = corpus::random_model(7, {0, 0, 1, 5});
  auto split = factor_split(m);
  auto models = all_models(m);
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& from = models[static_cast<std::size_t>(rng.uniform(0, 7))];
    int j = static_cast<int>(rng.uniform(1, 3)), k = static_cast<int>(rng.uniform(1, 3));
    auto a = link_at(m, split, from, j);
    CHECK(a.eq1_certified);
    CHECK(a.eq2_certified);
    CHECK(a.to.index_set == toggle(from.index_set, j));
    auto back = link_at(m, split, a.to, j);
    CHECK(same_model(back.to, from));
    auto round = compose(back.change, a.change);
    for (const char* v : {"s", "w"}) {
      const auto& e = round.substitution.at(v);
      CHECK(e.num == M(v) * e.den);
    }
    auto jk = link_at(m, split, link_at(m, split, from, j).to, k).to;
    auto kj = link_at(m, split, link_at(m, split, from, k).to, j).to;
    CHECK(same_model(jk, kj));
  }
}

TEST_CASE("canonical class of every model by adjunction") {
  Rng rng(46);
  for (int trial = 0; trial < 40; ++trial) {
    ScrollWeights w = random_weights(rng, 5);
    long k = rng.uniform(0, w.N());
    auto kt = oracle::canonical(oracle::enlarged(w, k));
    DivisorClass kx{kt.first + 2 + 4, kt.second + (w.c + w.N()) + w.ell};
    CHECK(kx == canonical_class(w));
    auto t = enlarged_table(w, k);
    DivisorClass D{2, std::max(2 * w.b, w.c)};
    CHECK(triple_product_on_XI(t, kx, kx, D) == k2_check(w).value);
  }
}

TEST_CASE("re-embedding") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    ScrollWeights w{0, rng.uniform(0, 1), 0, 0};
    w.c = 2 * w.b + rng.uniform(0, 2);
    w.ell = 2 * w.c + rng.uniform(1, 3);
    FibrationModel m = corpus::random_model(400 + trial, w);
    auto x = build_model(m, {1});
    auto r = reembed_hypersurface(m, x);
    CAPTURE(w.str());
    CHECK(r.applicable);
    CHECK(r.membership_holds);
    CHECK(r.first_equation_ok);
    CHECK(r.embedding_ok);
    CHECK(r.bidegree_ok);
    REQUIRE(r.k2_after.has_value());
    CHECK(r.k2_after->value == r.k2_before->value);
    CHECK(r.k2_after->verdict == r.k2_before->verdict);
    CHECK(decompose(r.model).f.total_degree() == w.N());
  }
  FibrationModel low = corpus::random_model(500, {0, 1, 1, 4}, true);
  auto r = reembed_hypersurface(low, build_model(low, {1}));
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.membership_holds);
  CHECK_FALSE(r.membership_offenders.empty());
  CHECK(r.reason.find("c < 2b") == 0);

  FibrationModel two = corpus::random_model(501, {0, 0, 0, 3});
  CHECK_FALSE(reembed_hypersurface(two, build_model(two, {1, 2})).applicable);
}

TEST_CASE("all_models serial and parallel agree") {
  FibrationModel m = corpus::random_model(9, {0, 0, 0, 5});
  auto s = all_models_serial(m);
  auto p = all_models(m);
  REQUIRE(s.size() == 32);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(same_model(s[i], p[i]));
}
