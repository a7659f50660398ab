#include <algorithm>

#include "dp2/cli/cli.hpp"
#include "dp2/intersect/intersect.hpp"
#include "dp2/ladder/ladder.hpp"
#include "dp2/links/links.hpp"

namespace dp2 {

namespace {

using ojson = nlohmann::ordered_json;

ojson verdict(Status s, bool probabilistic, const std::string& key, ojson evidence) {
  ojson v;
  v["status"] = to_string(s);
  v["probabilistic"] = probabilistic;
  v[key] = std::move(evidence);
  return v;
}

ojson not_run(const std::string& why) {
  ojson v;
  v["status"] = "not_run";
  v["reason"] = why;
  return v;
}

ojson triviality_json(const TrivialityReport& r) {
  ojson runs = ojson::array();
  for (const auto& [field, t] : r.runs) runs.push_back({{"field", field}, {"verdict", to_string(t)}});
  ojson j{{"verdict", to_string(r.verdict)}, {"runs", runs}, {"steps", r.steps}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ojson generality_json(const GeneralityReport& g) {
  ojson j;
  j["fiber"] = g.fiber;
  j["status"] = to_string(g.overall);
  j["probabilistic"] = g.probabilistic;
  auto sub = [](const SubVerdict& s) { return ojson{{"status", to_string(s.status)}, {"detail", s.detail}}; };
  j["certificate"] = {{"rank3", sub(g.g1)},
                      {"eight_points", sub(g.g2)},
                      {"fiber_quasi_smooth", sub(g.g3)},
                      {"resultant_degree", g.resultant_degree},
                      {"resultant", g.resultant},
                      {"attempts", g.attempts},
                      {"coordinate_changes", g.coordinate_changes},
                      {"fields", g.fields}};
  if (!g.witnesses.empty()) j["witness"] = g.witnesses;
  return j;
}

ojson k2_json(const K2Report& k) {
  return {{"weights", {{"a", k.weights.a}, {"b", k.weights.b}, {"c", k.weights.c}, {"ell", k.weights.ell}}},
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
}

ojson links_section(const FibrationModel& m, Status& overall) {
  ojson j;
  const long N = m.weights.N();
  if (N > 10) {
    j["status"] = "not_run";
    j["reason"] = "2^" + std::to_string(N) + " models exceed the enumeration cap of 2^10";
    return j;
  }
  FactorSplit split = factor_split(m);
  std::vector<ModelXI> models = all_models(m);
  ojson list = ojson::array();
  bool all_ok = true;
  for (const auto& x : models) {
    bool ok = x.eq1_homogeneous && x.eq2_homogeneous;
    all_ok = all_ok && ok;
    list.push_back({{"index_set", x.index_set}, {"k", x.k}, {"homogeneous", ok}});
  }
  ojson links = ojson::array();
  const ModelXI& start = models.front();
  for (int j = 1; j <= static_cast<int>(split.roots.size()); ++j) {
    LinkStep step = link_at(m, split, start, j);
    all_ok = all_ok && step.eq1_certified && step.eq2_certified;
    links.push_back({{"factor", j}, {"eq1_certified", step.eq1_certified}, {"eq2_certified", step.eq2_certified}});
  }
  HypersurfaceElimination e0 = eliminate_to_hypersurface(m, models.front());
  HypersurfaceElimination e1 = eliminate_to_hypersurface(m, models.back());
  all_ok = all_ok && e0.matches && e1.matches && e0.bidegree_ok && e1.bidegree_ok;
  j["status"] = all_ok ? "pass" : "fail";
  j["models"] = list;
  j["links_from_empty"] = links;
  j["eliminations"] = {{"empty", e0.matches && e0.bidegree_ok}, {"full", e1.matches && e1.bidegree_ok}};
  if (!all_ok) overall = combine(overall, Status::fail);
  return j;
}

ojson ladder_section(int max_level, Status& overall) {
  ojson j;
  bool all_ok = true;
  ojson towers = ojson::array();
  for (int delta = 0; delta <= 1; ++delta) {
    TowerReport t = tower_verify(max_level, delta);
    std::size_t failed = 0;
    for (const auto& c : t.checks) failed += c.ok ? 0 : 1;
    all_ok = all_ok && t.ok();
    towers.push_back({{"M", max_level}, {"delta", delta}, {"checks", t.checks.size()}, {"failed", failed}});
  }
  ojson certs = ojson::array();
  for (Case c : {Case::A1, Case::A, Case::B2F, Case::B, Case::C}) {
    for (int M = 1; M <= max_level; ++M) {
      for (int delta = 0; delta <= 1; ++delta) {
        if (!case_admits(c, M, delta)) continue;
        Certificate cert = contradiction_certificate(c, M, delta);
        all_ok = all_ok && cert.identity_holds && cert.sos_ok;
        certs.push_back({{"case", to_string(c)},
                         {"M", M},
                         {"delta", delta},
                         {"zero_residual", cert.identity_holds},
                         {"sos", cert.sos_ok}});
      }
    }
  }
  j["status"] = all_ok ? "pass" : "fail";
  j["towers"] = towers;
  j["certificates"] = certs;
  if (!all_ok) overall = combine(overall, Status::fail);
  return j;
}

}  // namespace

PipelineOptions pipeline_options(const ModelDocument& d) {
  PipelineOptions o;
  if (!d.options.primes.empty()) o.groebner.primes = d.options.primes;
  o.groebner.exact = d.options.exact;
  o.seed = d.options.seed.value_or(0);
  o.all_models = d.options.all_models;
  o.ladder = d.options.ladder;
  o.ladder_max_level = d.options.ladder_max_level;
  return o;
}

int VerdictReport::exit_code() const {
  if (satisfied) return 0;
  return overall == Status::inconclusive ? 2 : 1;
}

VerdictReport run_pipeline(const ModelDocument& doc, const PipelineOptions& opts) {
  if (doc.shape != FibrationModel::Shape::hypersurface)
    throw InputError("check expects a hypersurface document; complete intersections come from 'models'");
  const FibrationModel m = doc.model();
  const ScrollWeights& w = m.weights;
  if (w.N() < 0)
    throw InputError("N = ell - 2c = " + std::to_string(w.N()) + " is negative: f would have negative degree");

  VerdictReport out;
  ojson& j = out.json;
  ojson primes = ojson::array();
  for (auto p : opts.groebner.primes) primes.push_back(p);
  j["input"] = {{"weights", {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"ell", w.ell}}},
                {"equation", m.equation.str()},
                {"seed", opts.seed},
                {"primes", primes},
                {"exact", opts.groebner.exact},
                {"step_budget", opts.groebner.step_budget},
                {"warnings", doc.warnings}};
  if (doc.weight_matrix) {
    WellFormResult wf =
        well_form(WeightMatrix(doc.weight_matrix->columns, doc.weight_matrix->rows, 1, {"u", "v"}, {"x", "y", "z", "w"}));
    ojson wit = ojson::array();
    for (const auto& row : wf.witness) wit.push_back({row[0].str(), row[1].str()});
    j["input"]["well_form"] = {{"matrix", wf.matrix.str()}, {"witness", wit}, {"divisor", wf.divisor}};
  }

  Decomposition parts = decompose(m);
  FiberInventory inv = singular_fibers(m);
  K2Report k2 = k2_check(w);

  ojson hyp;
  Status overall = Status::pass;
  bool boundary = false;

  if (parts.degenerate || !inv.squarefree) {
    std::string witness = parts.degenerate ? "f = 0" : "f has a repeated root";
    for (const auto& s : inv.fibers)
      if (s.root.multiplicity > 1) witness = "repeated root " + s.root.label() + " of multiplicity " +
                                             std::to_string(s.root.multiplicity) + " in f = " + parts.f.str();
    hyp["quasi_smooth"] = verdict(Status::fail, false, "witness", witness);
    hyp["generality"] = not_run("quasi-smoothness failed");
    hyp["k2"] = not_run("quasi-smoothness failed");
    hyp["k2_total"] = not_run("quasi-smoothness failed");
    overall = Status::fail;
  } else {
    QuasiSmoothReport qs = quasi_smooth(m, opts.groebner);
    ojson charts = ojson::array();
    for (const auto& c : qs.charts) charts.push_back({{"chart", c.chart}, {"result", triviality_json(c.report)}});
    ojson qj = verdict(qs.status, qs.probabilistic, "certificate", charts);
    if (qs.offending_chart) qj["witness"] = "singular point on chart " + *qs.offending_chart;
    if (!qs.notes.empty()) qj["notes"] = qs.notes;
    hyp["quasi_smooth"] = qj;
    overall = combine(overall, qs.status);

    GeneralityOptions go;
    go.groebner = opts.groebner;
    go.seed = opts.seed;
    ojson gens = ojson::array();
    Status gen_all = Status::pass;
    bool gen_prob = false;
    for (const auto& s : inv.fibers) {
      GeneralityReport g = generality_check(s, parts, go);
      gen_all = combine(gen_all, g.overall);
      gen_prob = gen_prob || g.probabilistic;
      gens.push_back(generality_json(g));
    }
    hyp["generality"] = {{"status", to_string(gen_all)}, {"probabilistic", gen_prob}, {"fibers", gens}};
    overall = combine(overall, gen_all);

    Status k2s = k2.verdict == K2Verdict::violated ? Status::fail : Status::pass;
    if (!k2.routes_agree) k2s = Status::fail;
    boundary = k2.verdict == K2Verdict::boundary;
    ojson kj = verdict(k2s, false, "certificate", k2_json(k2));
    kj["boundary"] = boundary;
    hyp["k2"] = kj;
    overall = combine(overall, k2s);

    ojson per_k = ojson::array();
    bool agree = true;
    for (long k = 0; k <= w.N(); ++k) {
      EnlargedTable t = enlarged_table(w, k);
      Rational v = triple_product_on_XI(t, k2.canonical, k2.canonical, k2.nef_class);
      agree = agree && v == k2.value;
      per_k.push_back({{"k", k}, {"value", v.str()}});
    }
    Status tot = agree ? k2s : Status::fail;
    ojson tj = verdict(tot, false, "certificate", per_k);
    tj["boundary"] = boundary;
    tj["model_count"] = k2.model_count;
    hyp["k2_total"] = tj;
    overall = combine(overall, tot);
  }
  j["hypotheses"] = hyp;

  ojson fibers = ojson::array();
  for (const auto& s : inv.fibers)
    fibers.push_back({{"root", s.root.label()}, {"degree", s.root.degree}, {"multiplicity", s.root.multiplicity}});
  j["inventory"] = {{"N", w.N()}, {"model_count", k2.model_count}, {"fibers", fibers}, {"notes", inv.notes}};

  if (opts.all_models && !parts.degenerate && inv.squarefree)
    j["links"] = links_section(m, overall);
  else
    j["links"] = not_run(opts.all_models ? "needs squarefree f" : "all_models is off");
  j["ladder"] = opts.ladder ? ladder_section(opts.ladder_max_level, overall) : not_run("ladder is off");

  out.overall = overall;
  out.satisfied = overall == Status::pass && !boundary;
  ojson notes = ojson::array();
  if (boundary) notes.push_back("K^2 value is 0: the threshold is non-strict in the proof and strict in the statement");
  if (k2.c_negative) notes.push_back("c < 0");
  if (k2.verdict == K2Verdict::violated) notes.push_back("K^2 condition violated: the rigidity theorem does not apply");
  j["overall"] = {{"status", to_string(overall)},
                  {"main_theorem_hypotheses_satisfied", out.satisfied},
                  {"exit_code", out.exit_code()},
                  {"notes", notes}};
  return out;
}

}  // namespace dp2
