#pragma once

#include <string>
#include <vector>

#include "dp2/polycore/multipoly.hpp"

namespace dp2 {

// Dense univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
template <class K>
struct UPoly {
  std::vector<K> c;
  FieldTag field;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const K& lead() const { return c.back(); }
  void trim();
  K eval(const K& x) const;
  UPoly derivative() const;
  UPoly monic() const;
};

template <class K>
UPoly<K> operator*(const UPoly<K>& a, const UPoly<K>& b);
template <class K>
UPoly<K> operator-(const UPoly<K>& a, const UPoly<K>& b);
template <class K>
void divmod(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& quot, UPoly<K>& rem);
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b);  // monic, or zero
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b);

// Requires p to involve at most the variable var.
template <class K>
UPoly<K> to_univariate(const Poly<K>& p, std::size_t var);

// Yun decomposition: factors[k] is the product of the irreducible factors of multiplicity k+1.
template <class K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& p);

struct SquarefreeResult {
  bool squarefree = false;
  std::string reason;
};

// p univariate or a binary form over Q.
SquarefreeResult squarefree(const MultiPoly& p);
SquarefreeResult squarefree(const PolyFp& p);

// Distinct rational roots of a univariate rational polynomial, increasing.
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

// Distinct roots in F_p by exhaustive evaluation, increasing.
std::vector<std::uint32_t> roots_mod_p(const UPoly<Fp>& p);

UPoly<Fp> reduce_mod(const UPoly<Rational>& p, std::uint32_t prime);

}  // namespace dp2
