#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dp2/cli/cli.hpp"
#include "dp2/intersect/intersect.hpp"
#include "dp2/ladder/ladder.hpp"
#include "dp2/links/links.hpp"

using namespace dp2;
using ojson = nlohmann::ordered_json;

namespace {

struct Global {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint32_t> primes;
  bool exact = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

bool wants_json(const Global& g, const std::string& path) {
  return g.json || (path.size() > 5 && path.substr(path.size() - 5) == ".json");
}

ModelDocument load(const Global& g, const std::string& path) {
  ModelDocument d = parse_model(read_input(path), wants_json(g, path));
  for (const auto& w : d.warnings) std::cerr << "dp2: warning: " << w << "\n";
  if (g.seed) d.options.seed = g.seed;
  if (!g.primes.empty()) d.options.primes = g.primes;
  if (g.exact) d.options.exact = true;
  return d;
}

std::vector<long> split_longs(const std::string& s, char sep, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::pair<long, long> range(const std::string& s, const std::string& what) {
  auto v = split_longs(s, ':', what);
  if (v.size() == 1) return {v[0], v[0]};
  if (v.size() != 2 || v[0] > v[1]) throw InputError(what + " must be lo:hi with lo <= hi");
  return {v[0], v[1]};
}

void print_k2_text(const K2Report& k) {
  auto row = [](const std::string& key, const std::string& val) {
    std::cout << std::left << std::setw(16) << key << val << "\n";
  };
  row("weights", k.weights.str());
  row("canonical", k.canonical.str());
  row("nef_class", k.nef_class.str());
  row("value", k.value.str());
  row("closed_form", k.closed_form.str());
  row("sufficient", k.sufficient_lhs.str() + " > " + k.sufficient_rhs.str());
  row("routes_agree", k.routes_agree ? "true" : "false");
  row("verdict", to_string(k.verdict));
  row("c_negative", k.c_negative ? "true" : "false");
  row("N", std::to_string(k.N));
  row("model_count", k.model_count);
  for (const auto& n : k.notes) row("note", n);
}

int run_check(const Global& g, const std::string& path, bool all, bool ladder, int max_level) {
  ModelDocument d = load(g, path);
  if (all) d.options.all_models = true;
  if (ladder) d.options.ladder = true;
  if (max_level) d.options.ladder_max_level = max_level;
  VerdictReport r = run_pipeline(d, pipeline_options(d));
  std::cout << r.json.dump(2) << "\n";
  return r.exit_code();
}

int run_models(const Global& g, const std::string& path, bool all, const std::string& index) {
  ModelDocument d = load(g, path);
  if (d.shape != FibrationModel::Shape::hypersurface) throw InputError("models expects a hypersurface document");
  FibrationModel m = d.model();
  if (m.weights.N() < 0) throw InputError("N = ell - 2c is negative");
  if (!all && index.empty()) throw InputError("models needs --all or --index");
  std::vector<ModelXI> out;
  FactorSplit split;
  try {
    split = factor_split(m);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  if (all) {
    if (m.weights.N() > 16) throw InputError("--all is capped at N <= 16");
    out = all_models(m);
  } else {
    std::vector<int> I;
    for (long v : split_longs(index, ',', "--index")) I.push_back(static_cast<int>(v));
    std::sort(I.begin(), I.end());
    try {
      out.push_back(build_model(m, split, I));
    } catch (const std::exception& e) {
      throw InputError(std::string("--index: ") + e.what());
    }
  }
  if (wants_json(g, path)) {
    ojson arr = ojson::array();
    for (const auto& x : out) arr.push_back(emit_json(document_from_xi(x, d.options)));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i) std::cout << "# ---\n";
      std::cout << emit_toml(document_from_xi(out[i], d.options));
    }
  }
  return 0;
}

int run_k2(const Global& g, const std::string& weights, long ell) {
  auto w = split_longs(weights, ',', "--weights");
  if (w.size() != 3) throw InputError("--weights takes a,b,c");
  K2Report k = k2_check(ScrollWeights{w[0], w[1], w[2], ell});
  if (g.json) {
    ojson j{{"weights", {{"a", w[0]}, {"b", w[1]}, {"c", w[2]}, {"ell", ell}}},
            {"canonical", k.canonical.str()},
            {"nef_class", k.nef_class.str()},
            {"value", k.value.str()},
            {"closed_form", k.closed_form.str()},
            {"sufficient_lhs", k.sufficient_lhs.str()},
            {"sufficient_rhs", k.sufficient_rhs.str()},
            {"routes_agree", k.routes_agree},
            {"verdict", to_string(k.verdict)},
            {"c_negative", k.c_negative},
            {"N", k.N},
            {"model_count", k.model_count},
            {"notes", k.notes}};
    std::cout << j.dump(2) << "\n";
  } else {
    print_k2_text(k);
  }
  return k.verdict == K2Verdict::satisfied && k.routes_agree ? 0 : 1;
}

int run_ladder_verify(const Global& g, int max_level) {
  if (max_level < 0 || max_level > 64) throw InputError("--max-level must lie in 0..64");
  bool ok = true;
  ojson arr = ojson::array();
  for (int delta = 0; delta <= 1; ++delta) {
    TowerReport t = tower_verify(max_level, delta);
    ok = ok && t.ok();
    if (g.json) {
      ojson checks = ojson::array();
      for (const auto& c : t.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"derived", c.derived}, {"ok", c.ok}});
      arr.push_back({{"M", t.M}, {"delta", t.delta}, {"ok", t.ok()}, {"trace", t.trace}, {"checks", checks}});
      continue;
    }
    std::cout << "tower M=" << t.M << " delta=" << t.delta << "\n";
    for (const auto& line : t.trace) std::cout << "  " << line << "\n";
    for (const auto& c : t.checks)
      std::cout << (c.ok ? "  ok   " : "  FAIL ") << c.name << ": " << c.derived
                << (c.ok ? "" : " (expected " + c.expected + ")") << "\n";
  }
  if (g.json) std::cout << arr.dump(2) << "\n";
  return ok ? 0 : 1;
}

std::string summands_str(const Certificate& c) {
  std::string out;
  for (const auto& s : c.summands) {
    out += "  + " + s.coefficient.str();
    for (const auto& m : s.multiplier) out += "*" + m;
    out += "*(" + s.base.str() + ")^2\n";
  }
  return out;
}

int run_ladder_certify(const Global& g, const std::string& kase, int M, int delta) {
  Case c;
  try {
    c = parse_case(kase);
  } catch (const std::exception&) {
    throw InputError("--case must be one of A1, A, B2F, B, C");
  }
  if (M < 1 || M > 64) throw InputError("--M must lie in 1..64");
  if (delta != 0 && delta != 1) throw InputError("--delta must be 0 or 1");
  if (!case_admits(c, M, delta))
    throw InputError("case " + to_string(c) + " does not apply at M = " + std::to_string(M) +
                     ", delta = " + std::to_string(delta));
  Certificate cert = contradiction_certificate(c, M, delta);
  const bool ok = cert.identity_holds && cert.sos_ok;
  if (g.json) {
    ojson sq = ojson::array();
    for (const auto& s : cert.summands)
      sq.push_back({{"coefficient", s.coefficient.str()}, {"multiplier", s.multiplier}, {"base", s.base.str()}});
    ojson j{{"case", to_string(c)},
            {"M", M},
            {"delta", delta},
            {"ring", cert.ring},
            {"upper", cert.upper.str()},
            {"lower", cert.lower.str()},
            {"summands", sq},
            {"certificate", cert.certificate.str()},
            {"residual", cert.residual.str()},
            {"identity_holds", cert.identity_holds},
            {"sos_ok", cert.sos_ok},
            {"sos_note", cert.sos_note},
            {"chain", cert.chain.str()},
            {"notes", cert.notes}};
    if (cert.printed) {
      j["printed"] = cert.printed->str();
      j["printed_residual"] = cert.printed_residual->str();
    }
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  std::cout << "case " << to_string(c) << " M=" << M << " delta=" << delta << "\n";
  std::cout << "upper        " << cert.upper.str() << "\n";
  std::cout << "lower        " << cert.lower.str() << "\n";
  std::cout << "certificate  sum of\n" << summands_str(cert);
  std::cout << "residual     " << cert.residual.str() << "\n";
  std::cout << "identity     " << (cert.identity_holds ? "holds" : "FAILS") << "\n";
  std::cout << "sos          " << (cert.sos_ok ? "ok" : "FAILS") << (cert.sos_note.empty() ? "" : " (" + cert.sos_note + ")")
            << "\n";
  std::cout << "chain        " << cert.chain.str() << "\n";
  if (cert.printed) std::cout << "printed residual " << cert.printed_residual->str() << "\n";
  for (const auto& n : cert.notes) std::cout << "note         " << n << "\n";
  return ok ? 0 : 1;
}

int run_fuzz(const Global& g, std::uint64_t count, const std::string& weights, const std::string& ell,
             std::uint64_t run_limit) {
  FuzzRanges r;
  std::vector<std::string> parts;
  std::stringstream ss(weights);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--weights takes three ranges a,b,c, each lo:hi or a single value");
  std::tie(r.a_lo, r.a_hi) = range(parts[0], "a");
  std::tie(r.b_lo, r.b_hi) = range(parts[1], "b");
  std::tie(r.c_lo, r.c_hi) = range(parts[2], "c");
  std::tie(r.ell_lo, r.ell_hi) = range(ell, "--ell");
  PipelineOptions opts;
  if (!g.primes.empty()) opts.groebner.primes = g.primes;
  opts.groebner.exact = g.exact;
  opts.seed = g.seed.value_or(0);
  FuzzModelsResult res = fuzz_models(count, g.seed.value_or(0), r, run_limit, opts);
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << res.corpus_hash;
  ojson j{{"count", count},
          {"seed", g.seed.value_or(0)},
          {"corpus", res.corpus.size()},
          {"corpus_hash", hash.str()},
          {"rejected", res.rejected},
          {"pipeline_runs", res.pipeline_runs},
          {"passed", res.passed},
          {"violated", res.violated},
          {"inconclusive", res.inconclusive},
          {"certificate_failures", res.certificate_failures}};
  std::cout << j.dump(2) << "\n";
  return res.certificate_failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dp2: degree-2 del Pezzo fibration checker"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  std::string primes;
  std::uint64_t seed = 0;
  app.add_flag("--json", g.json, "JSON input and output");
  auto* seed_opt = app.add_option("--seed", seed, "seed for every random choice");
  app.add_option("--primes", primes, "comma-separated primes for the Groebner runs");
  app.add_flag("--exact", g.exact, "Groebner bases over Q");

  std::string path;
  bool all = false, ladder = false;
  int max_level = 0;
  auto* check = app.add_subcommand("check", "verify the hypotheses for a model file");
  check->add_option("file", path, "model file (TOML, or JSON with --json)")->required();
  check->add_flag("--all", all, "build every model and certify the links");
  check->add_flag("--ladder", ladder, "run the ladder suite");
  check->add_option("--max-level", max_level, "ladder depth");

  std::string index;
  auto* models = app.add_subcommand("models", "emit the models X_I");
  models->add_option("file", path, "model file")->required();
  models->add_flag("--all", all, "every subset");
  models->add_option("--index", index, "comma-separated indices, 1-based");

  std::string weights;
  long ell = 0;
  auto* k2 = app.add_subcommand("k2", "K^2 condition for given weights");
  k2->add_option("--weights", weights, "a,b,c")->required();
  k2->add_option("--ell", ell, "ell")->required();

  auto* lad = app.add_subcommand("ladder", "blow-up ladder calculus");
  lad->require_subcommand(1);
  int verify_level = 4;
  auto* verify = lad->add_subcommand("verify", "re-derive the tower identities");
  verify->add_option("--max-level", verify_level, "top level M");
  std::string kase;
  int M = 1, delta = 0;
  auto* certify = lad->add_subcommand("certify", "contradiction certificate for one case");
  certify->add_option("--case", kase, "A1, A, B2F, B or C")->required();
  certify->add_option("--M", M, "level")->required();
  certify->add_option("--delta", delta, "0 or 1");

  std::uint64_t count = 100, run_limit = 0;
  std::string fuzz_weights = "0,0,0", fuzz_ell = "4";
  auto* fuzz = app.add_subcommand("fuzz", "random models with certificate checks");
  fuzz->add_option("--count", count, "number of models");
  fuzz->add_option("--weights", fuzz_weights, "ranges a,b,c as lo:hi");
  fuzz->add_option("--ell", fuzz_ell, "range lo:hi");
  fuzz->add_option("--run", run_limit, "run the full pipeline on the first N models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*seed_opt) g.seed = seed;
    if (!primes.empty())
      for (long p : split_longs(primes, ',', "--primes")) {
        if (p < 3 || p > 2147483647 || !is_prime(static_cast<std::uint32_t>(p)))
          throw InputError("--primes: " + std::to_string(p) + " is not an odd prime");
        g.primes.push_back(static_cast<std::uint32_t>(p));
      }
    if (*check) return run_check(g, path, all, ladder, max_level);
    if (*models) return run_models(g, path, all, index);
    if (*k2) return run_k2(g, weights, ell);
    if (*verify) return run_ladder_verify(g, verify_level);
    if (*certify) return run_ladder_certify(g, kase, M, delta);
    if (*fuzz) return run_fuzz(g, count, fuzz_weights, fuzz_ell, run_limit);
  } catch (const InputError& e) {
    std::cerr << "dp2: input error" << (e.pos ? " at " + e.pos->str() : "") << ": " << e.message << "\n";
    return 3;
  } catch (const MalformedInput& e) {
    std::cerr << "dp2: input error: " << e.what() << "\n";
    return 3;
  } catch (const LadderError& e) {
    std::cerr << "dp2: input error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
