#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dp2/polycore/rational.hpp"
#include "dp2/scroll/scroll.hpp"

namespace dp2 {

struct IntersectionTable {
  ScrollWeights weights;
  Rational M3;   // l/2 - 2a - 2b - c
  Rational M2F;  // 2
  Rational MF2;  // 0
  Rational F3;   // 0
};

IntersectionTable intersection_table(const ScrollWeights& w);

Rational triple_product(const IntersectionTable& t, const DivisorClass& d1, const DivisorClass& d2,
                        const DivisorClass& d3);

// Top intersections on the ambient four-fold T.
struct ToricTable {
  Rational M4;   // from the Cox relation
  Rational M3F;  // 1/2
};
ToricTable toric_table(const ScrollWeights& w);
// D1.D2.D3.X computed on T with X of class (4, l).
Rational triple_product_on_T(const ToricTable& t, const ScrollWeights& w, const DivisorClass& d1,
                             const DivisorClass& d2, const DivisorClass& d3);

enum class K2Verdict { satisfied, boundary, violated };
std::string to_string(K2Verdict v);

struct K2Report {
  ScrollWeights weights;
  DivisorClass canonical;
  DivisorClass nef_class;
  Rational value;           // K^2 . D via triple_product
  Rational closed_form;     // 16 + 4a + 4b + 6c + 2 max(2b, c) - 7l
  Rational sufficient_lhs;  // 7l/2
  Rational sufficient_rhs;  // 2a + 2b + 3c + 8 + max(2b, c)
  bool routes_agree = false;
  K2Verdict verdict = K2Verdict::violated;
  bool c_negative = false;
  long N = 0;
  std::string model_count;  // 2^N in decimal
  std::vector<std::string> notes;
};

K2Report k2_check(const ScrollWeights& w);

// Top intersections on the enlarged five-fold T_I (k = |I|).
struct EnlargedTable {
  ScrollWeights weights;
  long k = 0;
  Rational M4F;           // 1/4
  Rational M5;            // (-a - b - l/2) / 4
  Rational M5_from_relation;
  DivisorClass eq1;       // (2, c + N)
  DivisorClass eq2;       // (4, l)
};

EnlargedTable enlarged_table(const ScrollWeights& w, long k = 0);

Rational five_fold(const EnlargedTable& t, const std::array<DivisorClass, 5>& d);
// D1.D2.D3 on X_I, computed on T_I against the two equations.
Rational triple_product_on_XI(const EnlargedTable& t, const DivisorClass& d1, const DivisorClass& d2,
                              const DivisorClass& d3);

// Exhaustive comparison of the two triple-product routes over a weight grid.
struct SweepGrid {
  long a_min = 0, a_max = 3;
  long b_max = 3;  // b runs from a to b_max
  long c_min = -3, c_max = 6;
  long ell_min = 1, ell_max = 20;
  long entry_min = -3, entry_max = 3;
};

struct SweepResult {
  std::uint64_t weights = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first_mismatch;
  friend bool operator==(const SweepResult& x, const SweepResult& y) {
    return x.weights == y.weights && x.evaluations == y.evaluations && x.mismatches == y.mismatches;
  }
};

std::vector<ScrollWeights> sweep_weights(const SweepGrid& g);
SweepResult sameint_sweep_serial(const SweepGrid& g);
SweepResult sameint_sweep_parallel(const SweepGrid& g);

}  // namespace dp2
