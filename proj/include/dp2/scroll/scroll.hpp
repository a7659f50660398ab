#pragma once

#include <array>
#include <string>
#include <vector>

#include "dp2/polycore/grading.hpp"
#include "dp2/polycore/multipoly.hpp"
#include "dp2/polycore/rational.hpp"

namespace dp2 {

struct ScrollWeights {
  long a = 0;
  long b = 0;
  long c = 0;
  long ell = 0;

  long N() const { return ell - 2 * c; }
  std::string str() const;
  friend bool operator==(const ScrollWeights&, const ScrollWeights&) = default;
};

// m*M + f*F.
struct DivisorClass {
  long m = 0;
  long f = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return {x.m + y.m, x.f + y.f}; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return {x.m - y.m, x.f - y.f}; }
  friend DivisorClass operator*(long k, DivisorClass x) { return {k * x.m, k * x.f}; }
  std::string str() const { return "(" + std::to_string(m) + ", " + std::to_string(f) + ")"; }
};

class WeightMatrix {
 public:
  WeightMatrix() = default;
  // rows[fiber_row] is the fiber row. Blocks partition the columns.
  WeightMatrix(VarList columns, std::array<std::vector<long>, 2> rows, int fiber_row,
               std::vector<std::string> base_block, std::vector<std::string> fiber_block);

  static WeightMatrix main_scroll(const ScrollWeights& w);
  // V_k: columns u v x y z w s, w of base weight c + k, s of base weight c + N - k.
  static WeightMatrix enlarged(const ScrollWeights& w, long k);

  const VarList& columns() const { return columns_; }
  const std::array<std::vector<long>, 2>& rows() const { return rows_; }
  int fiber_row() const { return fiber_row_; }
  const std::vector<long>& base() const { return rows_[1 - fiber_row_]; }
  const std::vector<long>& fiber() const { return rows_[fiber_row_]; }
  const std::vector<std::string>& base_block() const { return base_block_; }
  const std::vector<std::string>& fiber_block() const { return fiber_block_; }
  int column(const std::string& name) const;

  Grading grading() const;
  std::string str() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  VarList columns_;
  std::array<std::vector<long>, 2> rows_;
  int fiber_row_ = 1;
  std::vector<std::string> base_block_;
  std::vector<std::string> fiber_block_;
};

struct WellFormResult {
  WeightMatrix matrix;
  // witness * (original rows) = normalized rows before the column permutation.
  std::array<std::array<Rational, 2>, 2> witness;
  // New column order as indices into the original columns.
  std::vector<std::size_t> permutation;
  long divisor = 1;
  ScrollWeights weights;  // a, b, c when the columns are u v x y z w; ell left at 0
  bool main_shape = false;
};

WellFormResult well_form(const WeightMatrix& w);

DivisorClass canonical_class(const ScrollWeights& w);

struct MembershipReport {
  enum class Status { accept, warn, reject };
  Status status = Status::reject;
  Bidegree degree;
  std::vector<std::string> messages;
  std::vector<std::string> offending;
};
std::string to_string(MembershipReport::Status s);

MembershipReport validate_membership(const MultiPoly& p, const WeightMatrix& w, const Bidegree& expected);

// Variables of the main scroll ring in the global order.
const VarList& scroll_vars();

}  // namespace dp2
