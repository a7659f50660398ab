#include <omp.h>

#include "dp2/fibration/fibration.hpp"

namespace dp2 {

std::vector<std::pair<std::string, std::string>> quasi_smooth_charts() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* b : {"u", "v"})
    for (const char* f : {"x", "y", "z", "w"}) out.emplace_back(b, f);
  return out;
}

std::vector<MultiPoly> chart_generators(const MultiPoly& equation, const std::string& base_var,
                                        const std::string& fiber_var) {
  std::size_t ib = static_cast<std::size_t>(equation.require_var(base_var));
  std::size_t iff = static_cast<std::size_t>(equation.require_var(fiber_var));
  MultiPoly g = equation.evaluate(ib, Rational(1)).evaluate(iff, Rational(1));
  std::vector<MultiPoly> gens{g};
  for (std::size_t i = 0; i < equation.nvars(); ++i)
    if (i != ib && i != iff) gens.push_back(g.derivative(i));
  return gens;
}

namespace {

ChartResult run_chart(const MultiPoly& eq, const std::pair<std::string, std::string>& chart,
                      const GroebnerOptions& opts) {
  ChartResult r;
  r.chart = chart.first + "=1," + chart.second + "=1";
  r.report = ideal_triviality(chart_generators(eq, chart.first, chart.second), opts);
  return r;
}

QuasiSmoothReport assemble(std::vector<ChartResult> charts, const GroebnerOptions& opts) {
  QuasiSmoothReport rep;
  rep.probabilistic = !opts.exact;
  rep.status = Status::pass;
  for (const auto& c : charts) {
    if (c.report.verdict == Triviality::nontrivial) {
      rep.status = Status::fail;
      if (!rep.offending_chart) rep.offending_chart = c.chart;
    } else if (c.report.verdict == Triviality::inconclusive && rep.status == Status::pass) {
      rep.status = Status::inconclusive;
    }
  }
  if (rep.status == Status::inconclusive) {
    for (const auto& c : charts)
      if (c.report.verdict == Triviality::inconclusive) rep.notes.push_back(c.chart + ": " + c.report.note);
  }
  rep.charts = std::move(charts);
  return rep;
}

}  // namespace

QuasiSmoothReport quasi_smooth_serial(const FibrationModel& m, const GroebnerOptions& opts) {
  std::vector<ChartResult> charts;
  for (const auto& c : quasi_smooth_charts()) charts.push_back(run_chart(m.equation, c, opts));
  return assemble(std::move(charts), opts);
}

QuasiSmoothReport quasi_smooth(const FibrationModel& m, const GroebnerOptions& opts) {
  auto list = quasi_smooth_charts();
  std::vector<ChartResult> charts(list.size());
  const long n = static_cast<long>(list.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) charts[i] = run_chart(m.equation, list[i], opts);
  return assemble(std::move(charts), opts);
}

}  // namespace dp2
