#include "dp2/polycore/grading.hpp"

namespace dp2 {

int Grading::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

Bidegree Grading::of_variable(const std::string& name) const {
  int c = column(name);
  if (c < 0) throw std::invalid_argument("variable '" + name + "' is not a column of the weight matrix");
  return {base[c], fiber[c]};
}

template <class K>
Bidegree monomial_degree(const Poly<K>& p, const Exponent& e, const Grading& g) {
  Bidegree d;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    Bidegree w = g.of_variable(p.vars()[i]);
    d.base += w.base * e[i];
    d.fiber += w.fiber * e[i];
  }
  return d;
}

template <class K>
std::string term_string(const Poly<K>& p, const Exponent& e, const K& c) {
  Poly<K> t(p.vars(), p.field());
  t.add_term(e, c);
  return t.str();
}

template <class K>
DegreeResult weighted_degree(const Poly<K>& p, const Grading& g) {
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree_in(i) > 0 && g.column(p.vars()[i]) < 0)
      throw std::invalid_argument("variable '" + p.vars()[i] + "' is not a column of the weight matrix");
  DegreeResult r;
  if (p.is_zero()) return r;
  std::vector<std::pair<Bidegree, int>> counts;
  std::vector<Bidegree> degs;
  for (const auto& [e, c] : p.terms()) {
    Bidegree d = monomial_degree(p, e, g);
    degs.push_back(d);
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& x) { return x.first == d; });
    if (it == counts.end()) {
      counts.emplace_back(d, 1);
    } else {
      ++it->second;
    }
  }
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;
  r.degree = best->first;
  if (counts.size() == 1) {
    r.kind = DegreeResult::Kind::homogeneous;
    return r;
  }
  r.kind = DegreeResult::Kind::inhomogeneous;
  std::size_t k = 0;
  for (const auto& [e, c] : p.terms()) {
    if (!(degs[k] == r.degree)) {
      r.offending.push_back(term_string(p, e, c));
      r.offending_degrees.push_back(degs[k]);
    }
    ++k;
  }
  return r;
}

template DegreeResult weighted_degree(const Poly<Rational>&, const Grading&);
template DegreeResult weighted_degree(const Poly<Fp>&, const Grading&);
template Bidegree monomial_degree(const Poly<Rational>&, const Exponent&, const Grading&);
template Bidegree monomial_degree(const Poly<Fp>&, const Exponent&, const Grading&);
template std::string term_string(const Poly<Rational>&, const Exponent&, const Rational&);
template std::string term_string(const Poly<Fp>&, const Exponent&, const Fp&);

}  // namespace dp2
