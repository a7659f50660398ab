#include "dp2/polycore/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp2 {

template <class K>
void UPoly<K>::trim() {
  while (!c.empty() && FieldOps<K>::is_zero(c.back())) c.pop_back();
}

template <class K>
K UPoly<K>::eval(const K& x) const {
  K s = FieldOps<K>::from_int(0, field);
  for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
  return s;
}

template <class K>
UPoly<K> UPoly<K>::derivative() const {
  UPoly<K> d{{}, field};
  for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * FieldOps<K>::from_int(static_cast<long>(i), field));
  d.trim();
  return d;
}

template <class K>
UPoly<K> UPoly<K>::monic() const {
  if (c.empty()) return *this;
  UPoly<K> r = *this;
  K inv = FieldOps<K>::inverse(lead());
  for (auto& x : r.c) x *= inv;
  return r;
}

template <class K>
UPoly<K> operator*(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r{{}, a.field};
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, FieldOps<K>::from_int(0, a.field));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), FieldOps<K>::from_int(0, a.field));
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

template <class K>
void divmod(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& quot, UPoly<K>& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quot = UPoly<K>{{}, a.field};
  if (a.degree() < b.degree()) return;
  quot.c.assign(a.c.size() - b.c.size() + 1, FieldOps<K>::from_int(0, a.field));
  K inv = FieldOps<K>::inverse(b.lead());
  for (int k = rem.degree() - b.degree(); k >= 0; --k) {
    K q = rem.c[k + b.degree()] * inv;
    quot.c[k] = q;
    if (FieldOps<K>::is_zero(q)) continue;
    for (int j = 0; j <= b.degree(); ++j) rem.c[k + j] -= q * b.c[j];
  }
  quot.trim();
  rem.trim();
}

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

template <class K>
UPoly<K> to_univariate(const Poly<K>& p, std::size_t var) {
  UPoly<K> r{{}, p.field()};
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i]) throw std::invalid_argument("polynomial is not univariate in " + p.vars()[var]);
    if (r.c.size() <= e[var]) r.c.resize(e[var] + 1, FieldOps<K>::from_int(0, p.field()));
    r.c[e[var]] = c;
  }
  r.trim();
  return r;
}

template <class K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& p) {
  // Characteristic zero or degree below the characteristic is assumed.
  std::vector<UPoly<K>> out;
  if (p.degree() <= 0) return out;
  UPoly<K> a = p.monic();
  UPoly<K> b = a.derivative();
  UPoly<K> g = gcd(a, b);
  UPoly<K> c = exact_div(a, g);
  UPoly<K> d = exact_div(b, g) - c.derivative();
  while (c.degree() > 0) {
    UPoly<K> h = gcd(c, d);
    out.push_back(h);
    c = exact_div(c, h);
    d = exact_div(d, h) - c.derivative();
  }
  return out;
}

namespace {

template <class K>
SquarefreeResult squarefree_impl(const Poly<K>& p) {
  if (p.is_zero()) return {false, "zero polynomial has no squarefree decomposition"};
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree_in(i) > 0) used.push_back(i);
  if (used.empty()) return {true, "nonzero constant"};
  auto check_uni = [](const UPoly<K>& u) -> SquarefreeResult {
    UPoly<K> g = gcd(u, u.derivative());
    if (g.degree() > 0) return {false, "repeated factor of degree " + std::to_string(g.degree())};
    return {true, ""};
  };
  if (used.size() == 1) return check_uni(to_univariate(p, used[0]));
  if (used.size() > 2) throw std::invalid_argument("squarefree expects a univariate polynomial or binary form");
  int d = p.total_degree();
  for (const auto& [e, c] : p.terms())
    if (static_cast<int>(total_degree(e)) != d) throw std::invalid_argument("two-variable input is not a form");
  std::size_t x = used[0], y = used[1];
  Poly<K> dh = p.evaluate(y, p.one_coeff());
  UPoly<K> u = to_univariate(dh, x);
  if (u.degree() < d - 1) return {false, p.vars()[y] + "^2 divides the form"};
  return check_uni(u);
}

}  // namespace

SquarefreeResult squarefree(const MultiPoly& p) { return squarefree_impl(p); }
SquarefreeResult squarefree(const PolyFp& p) { return squarefree_impl(p); }

static std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

std::vector<Rational> rational_roots(const UPoly<Rational>& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  // Clear denominators and strip the root at zero.
  mpz_class l = 1;
  for (const auto& c : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.c) z.push_back(c.num() * (l / c.den()));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 < z.size()) {
    for (const auto& a : divisors(z[low]))
      for (const auto& b : divisors(z.back()))
        for (int s : {1, -1}) {
          Rational r(mpq_class(s * a, b));
          if (p.eval(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::uint32_t> roots_mod_p(const UPoly<Fp>& p) {
  std::vector<std::uint32_t> out;
  if (p.degree() <= 0) return out;
  std::uint32_t prime = p.field.prime;
  for (std::uint32_t x = 0; x < prime; ++x)
    if (p.eval(Fp(x, prime)).is_zero()) out.push_back(x);
  return out;
}

UPoly<Fp> reduce_mod(const UPoly<Rational>& p, std::uint32_t prime) {
  FieldTag f = FieldTag::modp(prime);
  UPoly<Fp> r{{}, f};
  for (const auto& c : p.c) r.c.push_back(FieldOps<Fp>::from_rational(c, f));
  r.trim();
  return r;
}

template struct UPoly<Rational>;
template struct UPoly<Fp>;
template UPoly<Rational> operator*(const UPoly<Rational>&, const UPoly<Rational>&);
template UPoly<Fp> operator*(const UPoly<Fp>&, const UPoly<Fp>&);
template UPoly<Rational> operator-(const UPoly<Rational>&, const UPoly<Rational>&);
template UPoly<Fp> operator-(const UPoly<Fp>&, const UPoly<Fp>&);
template void divmod(const UPoly<Rational>&, const UPoly<Rational>&, UPoly<Rational>&, UPoly<Rational>&);
template void divmod(const UPoly<Fp>&, const UPoly<Fp>&, UPoly<Fp>&, UPoly<Fp>&);
template UPoly<Rational> gcd(UPoly<Rational>, UPoly<Rational>);
template UPoly<Fp> gcd(UPoly<Fp>, UPoly<Fp>);
template UPoly<Rational> exact_div(const UPoly<Rational>&, const UPoly<Rational>&);
template UPoly<Fp> exact_div(const UPoly<Fp>&, const UPoly<Fp>&);
template UPoly<Rational> to_univariate(const Poly<Rational>&, std::size_t);
template UPoly<Fp> to_univariate(const Poly<Fp>&, std::size_t);
template std::vector<UPoly<Rational>> squarefree_decomposition(const UPoly<Rational>&);
template std::vector<UPoly<Fp>> squarefree_decomposition(const UPoly<Fp>&);

}  // namespace dp2
