#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dp2/polycore/groebner.hpp"
#include "dp2/polycore/multipoly.hpp"
#include "dp2/scroll/scroll.hpp"

namespace dp2 {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);
// fail dominates inconclusive, which dominates pass.
Status combine(Status a, Status b);

class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FibrationModel {
  enum class Shape { hypersurface, complete_intersection };
  ScrollWeights weights;
  MultiPoly equation;  // over scroll_vars()
  Shape shape = Shape::hypersurface;
  std::vector<int> index_set;
};

struct Decomposition {
  MultiPoly f, q, r;
  bool degenerate = false;  // f = 0
  std::vector<std::string> notes;
};

Decomposition decompose(const FibrationModel& m);
MultiPoly reassemble(const Decomposition& d);

// A root of f on P^1: either a rational point or a factor of f without rational roots.
struct RootClass {
  enum class Kind { rational, factor };
  Kind kind = Kind::rational;
  mpz_class u0 = 0, v0 = 1;  // rational point (u0 : v0), primitive, first nonzero entry positive
  MultiPoly form;            // the factor of f in (u, v): v0*u - u0*v, or a binary form of degree >= 2
  int degree = 1;
  int multiplicity = 1;
  std::string label() const;
};

struct SingularFiber {
  RootClass root;
  MultiPoly q_bar, r_bar;  // in x, y, z; empty ring for factor classes
  bool specialized = false;
};

struct FiberInventory {
  std::vector<SingularFiber> fibers;
  long N = 0;
  bool squarefree = true;
  std::vector<std::string> notes;
};

FiberInventory singular_fibers(const FibrationModel& m);

struct ChartResult {
  std::string chart;
  TrivialityReport report;
};

struct QuasiSmoothReport {
  Status status = Status::inconclusive;
  bool probabilistic = true;
  std::vector<ChartResult> charts;
  std::optional<std::string> offending_chart;
  std::vector<std::string> notes;
};

// The eight (u or v = 1) x (x, y, z or w = 1) charts, in a fixed order.
std::vector<std::pair<std::string, std::string>> quasi_smooth_charts();
// Dehomogenized equation and its partials in the remaining variables.
std::vector<MultiPoly> chart_generators(const MultiPoly& equation, const std::string& base_var,
                                        const std::string& fiber_var);

QuasiSmoothReport quasi_smooth(const FibrationModel& m, const GroebnerOptions& opts);
QuasiSmoothReport quasi_smooth_serial(const FibrationModel& m, const GroebnerOptions& opts);

struct GeneralityOptions {
  GroebnerOptions groebner;
  std::uint64_t seed = 0;
  int max_attempts = 6;
  int splitting_primes = 3;
  std::uint32_t splitting_start = 40009;
};

struct SubVerdict {
  Status status = Status::inconclusive;
  std::string detail;
};

struct GeneralityReport {
  std::string fiber;
  SubVerdict g1, g2, g3;
  Status overall = Status::inconclusive;
  bool probabilistic = false;
  int resultant_degree = -1;
  std::string resultant;
  int attempts = 0;
  std::vector<std::array<long, 9>> coordinate_changes;  // row-major, one per attempt
  std::vector<std::string> witnesses;
  std::vector<std::string> fields;  // fields the checks ran over
};

// q_bar, r_bar over Q or F_p (x, y, z only). seed drives the coordinate changes.
template <class K>
GeneralityReport generality_forms(const Poly<K>& q_bar, const Poly<K>& r_bar, const GeneralityOptions& opts,
                                  std::uint64_t seed);

// Rational fibers run over Q; factor classes run over F_p splittings.
GeneralityReport generality_check(const SingularFiber& s, const Decomposition& parts, const GeneralityOptions& opts);

// Symmetric Gram determinant of a ternary quadratic form (char != 2).
template <class K>
K quadric_det(const Poly<K>& q);

const VarList& fiber_vars();  // x, y, z
// Restriction of a (u..w)-polynomial to the fiber over (u0 : v0), as a polynomial in x, y, z.
template <class K>
Poly<K> specialize(const Poly<K>& p, const K& u0, const K& v0);

}  // namespace dp2
