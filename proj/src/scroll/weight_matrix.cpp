#include <algorithm>
#include <set>
#include <stdexcept>

#include "dp2/scroll/scroll.hpp"

namespace dp2 {

std::string ScrollWeights::str() const {
  return "(a,b,c,ell) = (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ", " +
         std::to_string(ell) + ")";
}

WeightMatrix::WeightMatrix(VarList columns, std::array<std::vector<long>, 2> rows, int fiber_row,
                           std::vector<std::string> base_block, std::vector<std::string> fiber_block)
    : columns_(std::move(columns)),
      rows_(std::move(rows)),
      fiber_row_(fiber_row),
      base_block_(std::move(base_block)),
      fiber_block_(std::move(fiber_block)) {
  if (fiber_row_ != 0 && fiber_row_ != 1) throw std::invalid_argument("fiber row index must be 0 or 1");
  for (const auto& r : rows_)
    if (r.size() != columns_.size()) throw std::invalid_argument("weight row length differs from column count");
  std::set<std::string> cols(columns_.begin(), columns_.end());
  if (cols.size() != columns_.size()) throw std::invalid_argument("duplicate column names");
  if (base_block_.empty() || fiber_block_.empty()) throw std::invalid_argument("irrelevant blocks must be nonempty");
  std::set<std::string> seen;
  for (const auto* blk : {&base_block_, &fiber_block_})
    for (const auto& n : *blk) {
      if (!cols.count(n)) throw std::invalid_argument("irrelevant block names unknown column '" + n + "'");
      if (!seen.insert(n).second) throw std::invalid_argument("irrelevant blocks overlap at '" + n + "'");
    }
  if (seen.size() != cols.size()) throw std::invalid_argument("irrelevant blocks do not cover all columns");
}

const VarList& scroll_vars() {
  static const VarList v = {"u", "v", "x", "y", "z", "w"};
  return v;
}

WeightMatrix WeightMatrix::main_scroll(const ScrollWeights& w) {
  return WeightMatrix(scroll_vars(), {std::vector<long>{1, 1, 0, w.a, w.b, w.c}, std::vector<long>{0, 0, 1, 1, 1, 2}}, 1,
                      {"u", "v"}, {"x", "y", "z", "w"});
}

WeightMatrix WeightMatrix::enlarged(const ScrollWeights& w, long k) {
  return WeightMatrix({"u", "v", "x", "y", "z", "w", "s"},
                      {std::vector<long>{1, 1, 0, w.a, w.b, w.c + k, w.c + w.N() - k},
                       std::vector<long>{0, 0, 1, 1, 1, 2, 2}},
                      1, {"u", "v"}, {"x", "y", "z", "w", "s"});
}

int WeightMatrix::column(const std::string& name) const {
  auto it = std::find(columns_.begin(), columns_.end(), name);
  return it == columns_.end() ? -1 : static_cast<int>(it - columns_.begin());
}

Grading WeightMatrix::grading() const { return Grading{columns_, base(), fiber()}; }

std::string WeightMatrix::str() const {
  std::string out;
  auto row = [&](const std::vector<long>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
    return s;
  };
  std::string head;
  for (std::size_t i = 0; i < columns_.size(); ++i) head += (i ? " " : "") + columns_[i];
  out = head + " | " + row(rows_[0]) + " / " + row(rows_[1]);
  return out;
}

DivisorClass canonical_class(const ScrollWeights& w) { return {-1, w.ell - 2 - w.a - w.b - w.c}; }

}  // namespace dp2
