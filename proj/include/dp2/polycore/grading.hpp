#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dp2/polycore/multipoly.hpp"

namespace dp2 {

struct Bidegree {
  long base = 0;
  long fiber = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, const Bidegree& b) { return {a.base + b.base, a.fiber + b.fiber}; }
  friend Bidegree operator-(Bidegree a, const Bidegree& b) { return {a.base - b.base, a.fiber - b.fiber}; }
  std::string str() const { return "(" + std::to_string(base) + ", " + std::to_string(fiber) + ")"; }
};

// Column weights for a two-row grading: base row and fiber row.
struct Grading {
  VarList columns;
  std::vector<long> base;
  std::vector<long> fiber;

  int column(const std::string& name) const;
  Bidegree of_variable(const std::string& name) const;
};

struct DegreeResult {
  enum class Kind { homogeneous, zero, inhomogeneous };
  Kind kind = Kind::zero;
  // Homogeneous: the degree. Inhomogeneous: the degree carried by most terms.
  Bidegree degree;
  std::vector<std::string> offending;
  std::vector<Bidegree> offending_degrees;

  bool homogeneous() const { return kind == Kind::homogeneous; }
  bool is_zero() const { return kind == Kind::zero; }
};

template <class K>
DegreeResult weighted_degree(const Poly<K>& p, const Grading& g);

template <class K>
Bidegree monomial_degree(const Poly<K>& p, const Exponent& e, const Grading& g);

template <class K>
std::string term_string(const Poly<K>& p, const Exponent& e, const K& c);

}  // namespace dp2
