#include "dp2/links/links.hpp"

namespace dp2 {

RationalExpr substitute_rational(const MultiPoly& p, const std::map<std::string, RationalExpr>& images) {
  std::map<std::string, MultiPoly> nums;
  std::vector<std::pair<std::size_t, const RationalExpr*>> moved;
  for (const auto& [name, img] : images) {
    int i = p.var_index(name);
    if (i < 0) continue;
    if (img.num.vars() != p.vars() || img.den.vars() != p.vars())
      throw std::invalid_argument("rational images must live in the ring of the polynomial");
    moved.emplace_back(static_cast<std::size_t>(i), &img);
  }
  MultiPoly den = p.one();
  std::vector<int> top(moved.size());
  for (std::size_t k = 0; k < moved.size(); ++k) {
    top[k] = std::max(p.degree_in(moved[k].first), 0);
    den = den * moved[k].second->den.pow(static_cast<unsigned>(top[k]));
  }
  std::vector<std::vector<MultiPoly>> npow(moved.size()), dpow(moved.size());
  for (std::size_t k = 0; k < moved.size(); ++k) {
    npow[k].push_back(p.one());
    dpow[k].push_back(p.one());
    for (int e = 1; e <= top[k]; ++e) {
      npow[k].push_back(npow[k].back() * moved[k].second->num);
      dpow[k].push_back(dpow[k].back() * moved[k].second->den);
    }
  }
  MultiPoly num = p.zero();
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    MultiPoly t = p.one();
    for (std::size_t k = 0; k < moved.size(); ++k) {
      int ek = e[moved[k].first];
      rest[moved[k].first] = 0;
      t = t * npow[k][ek] * dpow[k][top[k] - ek];
    }
    num += t.times_monomial(rest, c);
  }
  return {num, den};
}

InvolutionMap compose(const InvolutionMap& outer, const InvolutionMap& inner) {
  InvolutionMap out;
  for (const auto& [name, img] : outer.substitution) {
    RationalExpr a = substitute_rational(img.num, inner.substitution);
    RationalExpr b = substitute_rational(img.den, inner.substitution);
    out.substitution.emplace(name, RationalExpr{a.num * b.den, a.den * b.num});
  }
  for (const auto& [name, img] : inner.substitution)
    if (!out.substitution.count(name)) out.substitution.emplace(name, img);
  return out;
}

namespace {

void check_map(const MultiPoly& f, const MultiPoly& q, const MultiPoly& r, const InvolutionMap& map,
               MultiPoly& preservation, MultiPoly& twice) {
  MultiPoly w = f.var("w");
  const RationalExpr& img = map.substitution.at("w");
  const MultiPoly& N = img.num;
  const MultiPoly& D = img.den;
  MultiPoly F = f * w * w + q * w + r;
  preservation = f * N * N + q * N * D + r * D * D - F * D * D;
  InvolutionMap sq = compose(map, map);
  const RationalExpr& t = sq.substitution.at("w");
  twice = t.num - w * t.den;
}

}  // namespace

BigInvolution big_involution(const MultiPoly& f, const MultiPoly& q, const MultiPoly& r) {
  if (f.is_zero()) throw PreconditionError("big involution needs f != 0");
  int iw = f.require_var("w");
  for (const auto* p : {&f, &q, &r})
    if (p->degree_in(static_cast<std::size_t>(iw)) > 0) throw std::invalid_argument("f, q, r must not involve w");
  MultiPoly w = f.var("w");
  BigInvolution out;
  out.map.substitution.emplace("w", RationalExpr{-(f * w) - q, f});
  check_map(f, q, r, out.map, out.certificate.preservation_residual, out.certificate.double_residual);
  out.certificate.preserves = out.certificate.preservation_residual.is_zero();
  out.certificate.involutive = out.certificate.double_residual.is_zero();
  InvolutionMap printed;
  printed.substitution.emplace("w", RationalExpr{f * w - q, f});
  check_map(f, q, r, printed, out.certificate.printed_preservation_residual, out.certificate.printed_double_residual);
  if (!out.certificate.preserves || !out.certificate.involutive)
    throw std::logic_error("big involution certificate failed: " + out.certificate.preservation_residual.str());
  return out;
}

BigInvolution big_involution(const FibrationModel& m) {
  Decomposition d = decompose(m);
  return big_involution(d.f, d.q, d.r);
}

}  // namespace dp2
