#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "dp2/cli/cli.hpp"
#include "dp2/polycore/random.hpp"

using namespace dp2;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DP2_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text, bool json = false) {
  try {
    parse_model(text, json);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

PipelineOptions quick() {
  PipelineOptions o;
  o.seed = 3;
  return o;
}

}  // namespace

TEST_CASE("toml subset") {
  auto t = parse_toml(
      "a = 1\n"
      "s = \"x\\ty\"\n"
      "# comment\n"
      "arr = [1, -2,\n  3,]\n"
      "inl = { p = true, q = \"lit\" }\n"
      "[sec]\n"
      "b = false\n"
      "[[items]]\n"
      "k = 1\n"
      "[[items]]\n"
      "k = 2\n");
  REQUIRE(t.find("a"));
  CHECK(t.find("a")->i == 1);
  CHECK(t.find("s")->s == "x\ty");
  CHECK(t.find("arr")->items.size() == 3);
  CHECK(t.find("arr")->items[1].i == -2);
  CHECK(t.find("inl")->find("p")->b);
  CHECK_FALSE(t.find("sec")->find("b")->b);
  CHECK(t.find("items")->items.size() == 2);
  CHECK(t.find("items")->items[1].find("k")->i == 2);
  CHECK(t.find("arr")->pos.line == 4);
}

TEST_CASE("toml errors carry positions") {
  auto msg = [](const std::string& s) {
    try {
      parse_toml(s);
    } catch (const InputError& e) {
      REQUIRE(e.pos.has_value());
      return e.pos->str() + " " + e.message;
    }
    return std::string();
  };
  CHECK(msg("a = 1\na = 2\n").find("2:") == 0);
  CHECK(msg("a = 1.5\n").find("floating point") != std::string::npos);
  CHECK(msg("a = \"open\n").find("1:") == 0);
  CHECK(msg("a = [1 2]\n").find("expected ','") != std::string::npos);
  CHECK(msg("[t]\n[t]\n").find("defined twice") != std::string::npos);
  CHECK(msg("a = 99999999999999999999\n").find("out of range") != std::string::npos);
}

TEST_CASE("model documents parse") {
  auto d = parse_model(slurp("three_fibers.toml"));
  CHECK(d.weights == ScrollWeights{0, 0, 0, 3});
  CHECK(d.equations.size() == 1);
  CHECK(d.equations[0].size() == 17);
  CHECK(d.warnings.empty());
  auto j = parse_model(slurp("three_fibers.json"), true);
  CHECK(j.equation() == d.equation());
  CHECK(j.options.seed == std::optional<std::uint64_t>(5));
}

TEST_CASE("model document errors") {
  CHECK(error_of(slurp("bad_length.toml")).find("5:24:") == 0);
  std::string inh = error_of(slurp("inhomogeneous.toml"));
  CHECK(inh.find("6:3") != std::string::npos);
  CHECK(error_of("ell = 2\nequation = []\n").find("weights") != std::string::npos);
  CHECK(error_of("weights = { a = 0, b = 0, c = 0 }\nell = 2\nbogus = 1\nequation = []\n").find("bogus") !=
        std::string::npos);
  std::string base = "weights = { a = 0, b = 0, c = 0 }\nell = 1\nequation = [ { coeff = \"1\", exp = [1,0,0,0,0,2] } ]\n";
  CHECK(error_of(base + "[options]\nprimes = [4]\n").find("prime") != std::string::npos);
  CHECK(error_of(base + "[options]\nladder_max_level = 11\n") != "");
  CHECK(error_of(base + "[options]\nseed = -1\n") != "");
  CHECK(error_of(R"({"weights": {"a": 0, "b": 0, "c": 0}, "ell": 1, "equation": [{"coeff": 1, "exp": [1,0,0,0,0,2]}]})",
                 true)
            .find("/equation/0/coeff") != std::string::npos);
  CHECK(error_of("{\"weights\": ", true).find("1:") != std::string::npos);
  CHECK(error_of("weights = { a = 0, b = 0, c = 0 }\nell = 1\nequation = [ { coeff = \"0\", exp = [1,0,0,0,0,2] } ]\n")
            .find("zero") != std::string::npos);
}

TEST_CASE("duplicate monomials are merged with a warning") {
  auto d = parse_model(
      "weights = { a = 0, b = 0, c = 0 }\nell = 1\nequation = [\n"
      "  { coeff = \"1\", exp = [1,0,0,0,0,2] },\n"
      "  { coeff = \"2\", exp = [1,0,0,0,0,2] },\n"
      "  { coeff = \"1\", exp = [0,1,0,0,0,2] },\n"
      "  { coeff = \"1\", exp = [1,0,4,0,0,0] },\n"
      "  { coeff = \"-1\", exp = [1,0,4,0,0,0] },\n"
      "]\n");
  REQUIRE(d.warnings.size() == 3);
  CHECK(d.warnings[0].find("5:3: duplicate") == 0);
  CHECK(d.warnings[1].find("8:3: duplicate") == 0);
  CHECK(d.warnings[2].find("cancels") != std::string::npos);
  CHECK(d.equation() == parse_poly("3*u*w^2 + v*w^2", scroll_vars()));
}

// Property: emit then parse is the identity on random documents, in both formats.
TEST_CASE("document round trips") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    ScrollWeights w;
    w.a = rng.uniform(0, 2);
    w.b = rng.uniform(w.a, 2);
    w.c = rng.uniform(0, 3);
    w.ell = 2 * w.c + rng.uniform(0, 4);
    DocOptions o;
    if (rng.coin()) o.primes = {101, 103};
    if (rng.coin()) o.seed = static_cast<std::uint64_t>(rng.uniform(0, 1000));
    o.exact = rng.coin();
    o.all_models = rng.coin();
    o.ladder = rng.coin();
    o.ladder_max_level = static_cast<int>(rng.uniform(1, 10));
    auto doc = document_from_model(corpus::random_model(static_cast<std::uint64_t>(trial), w), o);
    auto t = parse_model(emit_toml(doc));
    CHECK(same_document(doc, t));
    CHECK(t.options == o);
    auto j = parse_model(emit_json(doc).dump(1), true);
    CHECK(same_document(doc, j));
    CHECK(j.equation() == doc.equation());
  }
}

TEST_CASE("complete intersection documents round trip") {
  FibrationModel m = corpus::random_model(3, {0, 0, 1, 5});
  for (const auto& x : all_models(m)) {
    auto doc = document_from_xi(x);
    CHECK(doc.shape == FibrationModel::Shape::complete_intersection);
    auto back = parse_model(emit_toml(doc));
    CHECK(same_document(doc, back));
    CHECK(back.equation(0) == x.eq1);
    CHECK(back.equation(1) == x.eq2);
    CHECK(back.index_set == x.index_set);
    CHECK_THROWS_AS(run_pipeline(back, quick()), InputError);
  }
}

TEST_CASE("pipeline on a generic model") {
  auto doc = document_from_model(corpus::random_model(12, {0, 0, 0, 4}));
  auto rep = run_pipeline(doc, quick());
  const auto& j = rep.json;
  CHECK(j["hypotheses"]["quasi_smooth"]["status"] == "pass");
  CHECK(j["hypotheses"]["generality"]["status"] == "pass");
  CHECK(j["hypotheses"]["k2"]["certificate"]["value"] == "-12");
  CHECK(j["hypotheses"]["k2_total"]["certificate"].size() == 5);
  CHECK(j["inventory"]["model_count"] == "16");
  CHECK(rep.satisfied);
  CHECK(rep.exit_code() == 0);
  CHECK(run_pipeline(doc, quick()).json.dump() == j.dump());
}

TEST_CASE("pipeline verdicts") {
  auto violated = run_pipeline(document_from_model(corpus::random_model(13, {0, 0, 0, 2})), quick());
  CHECK(violated.json["hypotheses"]["k2"]["status"] == "fail");
  CHECK(violated.exit_code() == 1);

  auto small = run_pipeline(parse_model(slurp("small.toml")), quick());
  CHECK(small.json["hypotheses"]["quasi_smooth"]["status"] == "fail");
  CHECK(small.exit_code() == 1);

  FibrationModel dbl{{0, 0, 0, 2}, parse_poly("u^2*w^2 + u^2*x^4 + v^2*y^4 + (u + v)^2*z^4", scroll_vars()),
                     FibrationModel::Shape::hypersurface, {}};
  auto rep = run_pipeline(document_from_model(dbl), quick());
  CHECK(rep.json["hypotheses"]["quasi_smooth"]["status"] == "fail");
  CHECK(rep.json["hypotheses"]["quasi_smooth"]["witness"].get<std::string>().find("repeated root") == 0);
  CHECK(rep.json["hypotheses"]["generality"]["status"] == "not_run");

  PipelineOptions tight = quick();
  tight.groebner.step_budget = 3;
  auto inc = run_pipeline(parse_model(slurp("three_fibers.toml")), tight);
  CHECK(inc.exit_code() == 2);
}

TEST_CASE("pipeline with links and ladder") {
  PipelineOptions o = quick();
  o.all_models = true;
  o.ladder = true;
  o.ladder_max_level = 3;
  auto rep = run_pipeline(parse_model(slurp("three_fibers.toml")), o);
  CHECK(rep.json["links"]["status"] == "pass");
  CHECK(rep.json["ladder"]["status"] == "pass");
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("fuzz corpus") {
  FuzzRanges r;
  r.c_hi = 1;
  r.ell_lo = 2;
  r.ell_hi = 5;
  PipelineOptions o = quick();
  auto a = fuzz_models(20, 7, r, 0, o);
  auto b = fuzz_models(20, 7, r, 0, o);
  CHECK(a.corpus_hash == b.corpus_hash);
  CHECK(a.corpus.size() + a.rejected.size() == 20);
  CHECK(a.certificate_failures.empty());
  CHECK(fuzz_models(20, 8, r, 0, o).corpus_hash != a.corpus_hash);
  for (const auto& d : a.corpus) CHECK(same_document(parse_model(emit_toml(d)), d));

  auto none = fuzz_models(0, 7, r, 0, o);
  CHECK(none.corpus.empty());

  FuzzRanges neg;
  neg.c_lo = neg.c_hi = 3;
  neg.ell_lo = neg.ell_hi = 5;
  auto n = fuzz_models(3, 1, neg, 0, o);
  CHECK(n.corpus.empty());
  REQUIRE(n.rejected.size() == 3);
  CHECK(n.rejected[0].find("N = ell - 2c = -1 < 0") != std::string::npos);
}

TEST_CASE("bidegree monomials match the hand enumeration") {
  for (const ScrollWeights& w : {ScrollWeights{0, 0, 0, 4}, ScrollWeights{0, 1, 1, 5}, ScrollWeights{1, 1, 2, 7}}) {
    auto lib = bidegree_monomials(w);
    auto ref = corpus::monomials_of(w, w.ell, 4);
    std::sort(lib.begin(), lib.end());
    std::sort(ref.begin(), ref.end());
    CHECK(lib == ref);
  }
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
