#pragma once

#include <string_view>
#include <vector>

#include "dp2/polycore/multipoly.hpp"

namespace dp2 {

// Division-free determinant by expansion over column subsets.
template <class K>
Poly<K> determinant(const std::vector<std::vector<Poly<K>>>& m, const Poly<K>& zero);

// Sylvester matrix of p (degree m) and q (degree n) in var, (m+n) square.
template <class K>
std::vector<std::vector<Poly<K>>> sylvester_matrix(const Poly<K>& p, const Poly<K>& q, std::size_t var);

// Res_var(p, q). Degree-0 cases follow Res = p^n q^m, so two constants give 1.
template <class K>
Poly<K> resultant_elim(const Poly<K>& p, const Poly<K>& q, std::string_view var);

extern template Poly<Rational> resultant_elim(const Poly<Rational>&, const Poly<Rational>&, std::string_view);
extern template Poly<Fp> resultant_elim(const Poly<Fp>&, const Poly<Fp>&, std::string_view);

}  // namespace dp2
