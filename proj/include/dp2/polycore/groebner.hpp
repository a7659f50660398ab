#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dp2/polycore/multipoly.hpp"

namespace dp2 {

enum class Triviality { trivial, nontrivial, inconclusive };
std::string to_string(Triviality t);

inline constexpr std::size_t kMaxGroebnerVars = 16;

// Reads DP2_STEP_BUDGET; falls back to a fixed default.
std::uint64_t default_step_budget();
const std::vector<std::uint32_t>& default_primes();

template <class K>
struct GroebnerRun {
  Triviality verdict = Triviality::inconclusive;
  // Reduced, monic, sorted by increasing leading monomial. Empty unless the run completed.
  std::vector<Poly<K>> basis;
  std::uint64_t steps = 0;
};

// Buchberger with Gebauer-Moller pair pruning and sugar selection, grevlex on the
// ring's variable order. With stop_on_unit the run ends as soon as a nonzero
// constant appears, and the basis is then {1}.
template <class K>
GroebnerRun<K> groebner_basis(const std::vector<Poly<K>>& gens, std::uint64_t budget, bool stop_on_unit = true);

struct GroebnerOptions {
  std::vector<std::uint32_t> primes = default_primes();
  bool exact = false;
  std::uint64_t step_budget = default_step_budget();
};

struct TrivialityReport {
  Triviality verdict = Triviality::inconclusive;
  bool probabilistic = true;
  // One entry per field tried: field label and its verdict.
  std::vector<std::pair<std::string, Triviality>> runs;
  std::uint64_t steps = 0;
  std::string note;
};

// Multi-prime (or exact) test of 1 in the ideal. Disagreement between primes,
// a prime dividing a denominator, or an exhausted budget gives inconclusive.
TrivialityReport ideal_triviality(const std::vector<MultiPoly>& gens, const GroebnerOptions& opts);

// Single-field form. Empty generator list gives false; an exhausted budget throws.
bool buchberger_trivial(const std::vector<MultiPoly>& gens, FieldTag field);

extern template struct GroebnerRun<Rational>;
extern template struct GroebnerRun<Fp>;

}  // namespace dp2
