#include "dp2/polycore/resultant.hpp"

#include <bit>
#include <optional>

namespace dp2 {

template <class K>
Poly<K> determinant(const std::vector<std::vector<Poly<K>>>& m, const Poly<K>& zero) {
  const std::size_t n = m.size();
  if (n == 0) return zero.one();
  if (n > 24) throw std::invalid_argument("determinant too large for subset expansion");
  std::vector<std::optional<Poly<K>>> dp(std::size_t{1} << n);
  dp[0] = zero.one();
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<std::optional<Poly<K>>> next(dp.size());
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      if (!dp[mask] || static_cast<std::size_t>(std::popcount(mask)) != row) continue;
      for (std::size_t col = 0; col < n; ++col) {
        if (mask & (std::size_t{1} << col)) continue;
        const Poly<K>& a = m[row][col];
        if (a.is_zero()) continue;
        int above = std::popcount(mask >> (col + 1));
        Poly<K> t = *dp[mask] * a;
        if (above & 1) t = -t;
        std::size_t nm = mask | (std::size_t{1} << col);
        if (next[nm]) {
          *next[nm] += t;
        } else {
          next[nm] = std::move(t);
        }
      }
    }
    dp = std::move(next);
  }
  auto& full = dp.back();
  return full ? *full : zero;
}

template <class K>
std::vector<std::vector<Poly<K>>> sylvester_matrix(const Poly<K>& p, const Poly<K>& q, std::size_t var) {
  auto pc = p.coefficients_in(var);
  auto qc = q.coefficients_in(var);
  std::size_t dm = pc.size() - 1, dn = qc.size() - 1;
  std::size_t size = dm + dn;
  Poly<K> z = p.zero();
  std::vector<std::vector<Poly<K>>> s(size, std::vector<Poly<K>>(size, z));
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t k = 0; k <= dm; ++k) s[r][r + k] = pc[dm - k];
  for (std::size_t r = 0; r < dm; ++r)
    for (std::size_t k = 0; k <= dn; ++k) s[dn + r][r + k] = qc[dn - k];
  return s;
}

template <class K>
Poly<K> resultant_elim(const Poly<K>& p, const Poly<K>& q, std::string_view var) {
  if (p.vars() != q.vars()) throw std::invalid_argument("resultant operands in different rings");
  std::size_t v = static_cast<std::size_t>(p.require_var(var));
  if (p.is_zero() || q.is_zero()) return p.zero();
  int m = p.degree_in(v), n = q.degree_in(v);
  if (m == 0 && n == 0) return p.one();
  if (m == 0) return p.pow(static_cast<unsigned>(n));
  if (n == 0) return q.pow(static_cast<unsigned>(m));
  return determinant(sylvester_matrix(p, q, v), p.zero());
}

template Poly<Rational> determinant(const std::vector<std::vector<Poly<Rational>>>&, const Poly<Rational>&);
template Poly<Fp> determinant(const std::vector<std::vector<Poly<Fp>>>&, const Poly<Fp>&);
template std::vector<std::vector<Poly<Rational>>> sylvester_matrix(const Poly<Rational>&, const Poly<Rational>&, std::size_t);
template std::vector<std::vector<Poly<Fp>>> sylvester_matrix(const Poly<Fp>&, const Poly<Fp>&, std::size_t);
template Poly<Rational> resultant_elim(const Poly<Rational>&, const Poly<Rational>&, std::string_view);
template Poly<Fp> resultant_elim(const Poly<Fp>&, const Poly<Fp>&, std::string_view);

}  // namespace dp2
