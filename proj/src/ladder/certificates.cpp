#include "dp2/ladder/ladder.hpp"

namespace dp2 {

std::string to_string(Case c) {
  switch (c) {
    case Case::A1: return "A1";
    case Case::A: return "A";
    case Case::B2F: return "B2F";
    case Case::B: return "B";
    case Case::C: return "C";
  }
  return "?";
}

Case parse_case(const std::string& s) {
  for (Case c : {Case::A1, Case::A, Case::B2F, Case::B, Case::C})
    if (to_string(c) == s) return c;
  throw LadderError("unknown case '" + s + "' (expected A1, A, B2F, B or C)");
}

bool case_admits(Case c, int M, int delta) {
  if (delta != 0 && delta != 1) return false;
  switch (c) {
    case Case::A1: return M == 1;
    case Case::B2F: return M == 2 && delta == 1;
    case Case::A:
    case Case::B:
    case Case::C: return M >= 2;
  }
  return false;
}

bool InequalityChain::strict() const {
  for (const auto& l : links)
    if (l.strict) return true;
  return false;
}

std::string InequalityChain::str() const {
  std::string out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i == 0) out += links[i].lhs;
    out += links[i].strict ? " < " : " <= ";
    out += links[i].rhs + " [" + links[i].source + "]";
  }
  return out;
}

VarList certificate_ring(int M) {
  VarList v = {"n", "gamma", "t", "tF", "tm"};
  for (int i = 1; i <= M; ++i) v.push_back("l" + std::to_string(i));
  return v;
}

bool sos_structural(const std::vector<SquareTerm>& terms, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (const auto& t : terms) {
    if (t.coefficient.sign() <= 0) return fail("non-positive coefficient " + t.coefficient.str());
    for (const auto& m : t.multiplier)
      if (m != "t" && m != "tF" && m != "tm") return fail("multiplier " + m + " is not a weight in (0, 1]");
    if (t.base.is_zero()) return fail("zero square");
  }
  if (why) *why = std::to_string(terms.size()) + " weighted squares";
  return true;
}

namespace {

struct Sym {
  VarList ring;
  int M, delta;
  MultiPoly v(const std::string& name) const { return MultiPoly::variable(ring, name); }
  MultiPoly c(long k) const { return MultiPoly::from_int(ring, k); }
  MultiPoly l(int i) const { return v("l" + std::to_string(i)); }

  // Upper bound on the multiplicity at level k, general-level form.
  MultiPoly mult_sum(int k) const {
    MultiPoly n = v("n"), g = v("gamma"), l1 = l(1);
    MultiPoly s = c(4 * (k - 1 + delta)) * n * n * g;
    for (int i = 2; i <= k; ++i) s += c(4) * n * n - c(2) * l1 * l1 - l(i) * l(i) - c(2) * l1 * l(i);
    return s;
  }
  MultiPoly mult_first() const {
    MultiPoly n = v("n"), l1 = l(1);
    return c(2) * n * n - c(2) * l1 * l1 + c(4) * n * n * v("gamma");
  }
  // 4 n^2 times the boundary coefficient of the top exceptional divisor.
  MultiPoly lower_sum(int k) const {
    MultiPoly n = v("n"), s = c(4 * (k - 1 + delta)) * n * n * v("gamma");
    for (int i = 2; i <= k; ++i) s += c(4) * n * (c(2) * n - l(1) - l(i));
    return s;
  }
  MultiPoly lower_first() const {
    MultiPoly n = v("n");
    return c(4) * n * (n - l(1)) + c(4) * n * n * v("gamma");
  }
  MultiPoly pair_form(int i) const { return c(2) * v("n") - l(1) - l(i); }
};

MultiPoly expand(const std::vector<SquareTerm>& terms, const VarList& ring) {
  MultiPoly s(ring);
  for (const auto& t : terms) {
    MultiPoly p = (t.base * t.base).scaled(t.coefficient);
    for (const auto& m : t.multiplier) p = p * MultiPoly::variable(ring, m);
    s += p;
  }
  return s;
}

}  // namespace

Certificate contradiction_certificate(Case kase, int M, int delta) {
  if (!case_admits(kase, M, delta))
    throw LadderError("case " + to_string(kase) + " does not admit M = " + std::to_string(M) +
                      ", delta = " + std::to_string(delta));
  Certificate out;
  out.kase = kase;
  out.M = M;
  out.delta = delta;
  out.ring = certificate_ring(M);
  Sym S{out.ring, M, delta};
  MultiPoly n = S.v("n"), t = S.v("t"), tF = S.v("tF"), tm = S.v("tm"), g = S.v("gamma");
  auto& sq = out.summands;
  auto add = [&](long num, std::vector<std::string> mult, MultiPoly base) {
    if (num > 0) sq.push_back({Rational(num), std::move(mult), std::move(base)});
  };
  const std::string bound_src = "multiplicity bound (strict degree bound)";
  std::string lower_src = "multiplicity template";

  switch (kase) {
    case Case::A1:
      out.upper = S.mult_first();
      out.lower = S.lower_first();
      add(2, {}, n - S.l(1));
      lower_src = "4 n^2 alpha template";
      break;
    case Case::A:
      out.upper = S.mult_sum(M);
      out.lower = S.lower_sum(M);
      add(M - 1, {}, S.l(1));
      for (int i = 2; i <= M; ++i) add(1, {}, S.pair_form(i));
      lower_src = "4 n^2 alpha template";
      break;
    case Case::B2F:
      out.upper = S.c(2) * n * n + t * S.mult_sum(2) + S.c(4) * tF * n * n * g;
      out.lower = S.c(4) * n * n + t * S.lower_sum(2) + S.c(4) * tF * n * n * g;
      add(2, {}, n);
      add(1, {"t"}, S.l(1));
      add(1, {"t"}, S.pair_form(2));
      out.notes.push_back("the combined display drops -4 n lambda_2 from the right side; the multiplicity template keeps it");
      break;
    case Case::B: {
      out.upper = S.c(2) * n * n + t * S.mult_sum(M);
      out.lower = S.c(4) * n * n + t * S.lower_sum(M);
      add(2, {}, n);
      add(M - 1, {"t"}, S.l(1));
      for (int i = 2; i <= M; ++i) add(1, {"t"}, S.pair_form(i));
      MultiPoly printed = S.c(2) * n * n + S.c(M - 1) * t * S.l(1) * S.l(1);
      for (int i = 2; i <= M; ++i) printed += S.pair_form(i) * S.pair_form(i);
      out.printed = printed;
      break;
    }
    case Case::C: {
      const int Mm = M - 1;
      out.upper = S.c(2) * n * n + t * S.mult_sum(M) + tm * S.mult_sum(Mm);
      out.lower = S.c(4) * n * n + t * S.lower_sum(M) + tm * S.lower_sum(Mm);
      add(2, {}, n);
      add(M - 1, {"t"}, S.l(1));
      for (int i = 2; i <= M; ++i) add(1, {"t"}, S.pair_form(i));
      add(Mm - 1, {"tm"}, S.l(1));
      for (int i = 2; i <= Mm; ++i) add(1, {"tm"}, S.pair_form(i));
      if (Mm == 1) out.notes.push_back("M - 1 = 1: the t- terms cancel on both sides and contribute nothing");
      break;
    }
  }

  out.certificate = expand(sq, out.ring);
  out.residual = out.upper - out.lower + out.certificate;
  out.identity_holds = out.residual.is_zero();
  out.sos_ok = sos_structural(sq, &out.sos_note);
  if (out.printed) {
    out.printed_residual = out.upper - out.lower + *out.printed;
    if (!out.printed_residual->is_zero())
      out.notes.push_back("printed form has t only on the lambda_1 term; exact only with t multiplying the whole sum");
  }
  out.chain.links = {{"lower", "mult_B", false, lower_src}, {"mult_B", "upper", true, bound_src}};
  return out;
}

}  // namespace dp2
