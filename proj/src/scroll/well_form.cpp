#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dp2/scroll/scroll.hpp"

namespace dp2 {

WellFormResult well_form(const WeightMatrix& w) {
  const auto& cols = w.columns();
  const auto& rows = w.rows();
  const std::size_t n = cols.size();

  bool rank2 = false;
  for (std::size_t i = 0; i < n && !rank2; ++i)
    for (std::size_t j = i + 1; j < n && !rank2; ++j)
      if (rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i] != 0) rank2 = true;
  if (!rank2) throw std::invalid_argument("weight matrix rows are linearly dependent");

  int ix = w.column("x"), iy = w.column("y"), iz = w.column("z");
  if (ix < 0 || iy < 0 || iz < 0) throw std::invalid_argument("weight matrix lacks one of the columns x, y, z");
  const std::size_t fib[3] = {static_cast<std::size_t>(ix), static_cast<std::size_t>(iy), static_cast<std::size_t>(iz)};
  auto unit_fiber = [&](int r) { return rows[r][ix] == 1 && rows[r][iy] == 1 && rows[r][iz] == 1; };
  int fr = unit_fiber(w.fiber_row()) ? w.fiber_row() : (unit_fiber(1 - w.fiber_row()) ? 1 - w.fiber_row() : -1);
  if (fr < 0) throw std::invalid_argument("no row has weight 1 on each of x, y, z");
  int br = 1 - fr;

  const auto& F = rows[fr];
  std::vector<long> B = rows[br];
  // B_current = alpha * B_original + beta * F.
  Rational alpha(1), beta(0);
  long divisor = 1;

  const auto& blk = std::find(w.base_block().begin(), w.base_block().end(), "x") != w.base_block().end()
                        ? w.fiber_block()
                        : w.base_block();
  for (int iter = 0; iter < 4; ++iter) {
    bool changed = false;
    long m = std::min({B[fib[0]], B[fib[1]], B[fib[2]]});
    if (m != 0) {
      for (std::size_t i = 0; i < n; ++i) B[i] -= m * F[i];
      beta -= Rational(m);
      changed = true;
    }
    long g = 0;
    for (long x : B) g = std::gcd(g, x);
    if (g > 1) {
      for (long& x : B) x /= g;
      alpha /= Rational(g);
      beta /= Rational(g);
      divisor *= g;
      changed = true;
    }
    for (const auto& name : blk) {
      int c = w.column(name);
      if (F[c] != 0 || B[c] == 0) continue;
      if (B[c] < 0) {
        for (long& x : B) x = -x;
        alpha = -alpha;
        beta = -beta;
        changed = true;
      }
      break;
    }
    if (!changed) break;
  }

  WellFormResult res;
  res.divisor = divisor;
  res.witness[fr][fr] = Rational(1);
  res.witness[fr][br] = Rational(0);
  res.witness[br][br] = alpha;
  res.witness[br][fr] = beta;

  std::vector<std::size_t> order(fib, fib + 3);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return B[p] < B[q]; });
  res.permutation.resize(n);
  std::iota(res.permutation.begin(), res.permutation.end(), 0);
  for (int k = 0; k < 3; ++k) res.permutation[fib[k]] = order[k];

  VarList nc(n);
  std::array<std::vector<long>, 2> nr{std::vector<long>(n), std::vector<long>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    nc[i] = cols[res.permutation[i]];
    nr[fr][i] = F[res.permutation[i]];
    nr[br][i] = B[res.permutation[i]];
  }
  res.matrix = WeightMatrix(nc, nr, fr, w.base_block(), w.fiber_block());

  std::vector<std::string> sorted_cols(nc.begin(), nc.end());
  std::sort(sorted_cols.begin(), sorted_cols.end());
  std::vector<std::string> main_cols = scroll_vars();
  std::sort(main_cols.begin(), main_cols.end());
  if (sorted_cols == main_cols) {
    const auto& base = res.matrix.base();
    auto at = [&](const char* name) { return base[res.matrix.column(name)]; };
    res.main_shape = at("u") == 1 && at("v") == 1;
    res.weights.a = nr[br][fib[1]];
    res.weights.b = nr[br][fib[2]];
    res.weights.c = at("w");
  }
  return res;
}

}  // namespace dp2
