#pragma once

#include "dp2/links/links.hpp"

namespace dp2::detail {

// Unimodular change of (u, v) moving the rational point (u0 : v0) to (0 : 1).
struct Centering {
  Rational u0, v0, alpha, beta;  // new u = v0 u - u0 v, new v = alpha u + beta v

  MultiPoly to_centered(const MultiPoly& p) const;    // p(old) written in new coordinates
  MultiPoly from_centered(const MultiPoly& p) const;  // inverse
};

Centering centering_for(const RootClass& root);

}  // namespace dp2::detail
