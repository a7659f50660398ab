#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dp2/polycore/multipoly.hpp"
#include "dp2/polycore/rational.hpp"

namespace dp2 {

class LadderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- tower calculus ----

// Divisors at level i: K0, F0, EQ (pulled back from X0) and the total pullbacks Ehat_1..Ehat_i.
// Curves at level i: l0 (pullback of L0) and the pullbacks fhat_1..fhat_i of the fiber classes.
struct TowerClass {
  int level = 0;
  std::map<std::string, Rational> divisor;  // keys K0 F0 EQ E1 E2 ...
  std::map<std::string, Rational> curve;    // keys l0 f1 f2 ...

  static TowerClass div(int level, std::map<std::string, Rational> d) { return {level, std::move(d), {}}; }
  static TowerClass cur(int level, std::map<std::string, Rational> c) { return {level, {}, std::move(c)}; }
  TowerClass operator+(const TowerClass& o) const;
  TowerClass operator-(const TowerClass& o) const;
  TowerClass scaled(const Rational& r) const;
  bool is_divisor() const { return curve.empty(); }
  std::string str() const;
};

// Divisor . curve on the same level.
Rational pair(const TowerClass& d, const TowerClass& c);

// A curve class on the ruled surface E^(i) in the basis (L_i, f_i).
struct SurfaceClass {
  Rational cL, cf;
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
  std::string str() const;
};

struct TowerLevel {
  int i = 0;
  int m = 0;                  // E^(i) is F_m
  Rational deg_normal;        // deg N of L_(i-1) in X^(i-1)
  Rational shift;             // sigma_i^* L_(i-1) = L_i + shift f_i
  TowerClass L;               // L_i as a curve class on level i
  TowerClass K;               // K of X^(i)
  TowerClass F;               // proper transform of F0
  std::vector<TowerClass> E;  // E^(j,i), j = 1..i
  std::vector<bool> contains;      // L_i inside E^(j,i)
  bool F_contains = false;         // L_i inside F^(i)
  std::vector<Rational> nu_F;      // nu_(E^(j))(F0), j = 1..i
  std::vector<int> discrepancy;    // coefficient of E^(j,i) in K_i - sigma^* K_0
};

struct ChecklistItem {
  std::string name;
  std::string expected, derived;
  bool ok = false;
};

struct TowerReport {
  int M = 0, delta = 0;
  std::vector<TowerLevel> levels;  // 0..M
  std::vector<ChecklistItem> checks;
  std::vector<std::string> trace;
  bool ok() const;
};

TowerReport tower_verify(int M, int delta);

// ---- ladder states and degrees ----

struct LadderState {
  int M = 1;
  int delta = 0;
  Rational n{1}, nuQ{0}, gamma{1};
  std::vector<Rational> lambdas, alphas, ks;
  Rational c0l0{0};

  // Throws LadderError naming the violated range.
  void validate() const;
};

struct Interval {
  Rational lo, hi;
};

struct DegreeProfile {
  std::vector<Interval> beta_plus_dv;  // levels 1..M
  std::vector<Rational> bound;         // right side of the degree bound
  bool dominated() const;              // hi < bound at every level
};

DegreeProfile vertical_degrees(const LadderState& s);
Rational degree_bound(const LadderState& s, int level);

enum class Centre { fiber_curve, point_off_section };
Rational multiplicity_bounds(const LadderState& s, Centre centre);

// ---- log pullback ----

struct LogPullback {
  std::vector<Rational> coefficients;  // E^(1,M) .. E^(M), then F^(M)
  std::vector<Rational> rederived;
  bool agree = false;
  std::vector<std::string> trace;
};

LogPullback log_pullback_coefficients(int M, int delta, const Rational& n, const Rational& gamma,
                                      const std::vector<Rational>& lambdas);

// ---- contradiction certificates ----

enum class Case { A1, A, B2F, B, C };
std::string to_string(Case c);
Case parse_case(const std::string& s);
bool case_admits(Case c, int M, int delta);

// One inequality between named quantities; strict or not.
struct InequalityLink {
  std::string lhs, rhs;
  bool strict = false;
  std::string source;
};

struct InequalityChain {
  std::vector<InequalityLink> links;
  // lhs of the first link compared with rhs of the last one.
  bool strict() const;
  std::string str() const;
};

// coefficient * multiplier * base^2, multiplier a product of t-symbols in (0, 1].
struct SquareTerm {
  Rational coefficient;
  std::vector<std::string> multiplier;
  MultiPoly base;
};

struct Certificate {
  Case kase = Case::A;
  int M = 1, delta = 0;
  VarList ring;
  MultiPoly upper, lower;
  std::vector<SquareTerm> summands;
  MultiPoly certificate;   // sum of the summands
  MultiPoly residual;      // upper - lower + certificate
  bool identity_holds = false;
  bool sos_ok = false;
  std::string sos_note;
  InequalityChain chain;
  // The form as printed, when it differs from the derived one.
  std::optional<MultiPoly> printed;
  std::optional<MultiPoly> printed_residual;  // upper - lower + printed
  std::vector<std::string> notes;
};

VarList certificate_ring(int M);
Certificate contradiction_certificate(Case c, int M, int delta);

// Sum of squares check on the summand list.
bool sos_structural(const std::vector<SquareTerm>& terms, std::string* why = nullptr);

struct FuzzPoint {
  Rational n, gamma, t, tF, tm;
  std::vector<Rational> lambdas;
  int M = 1, delta = 0;
};

struct CaseFuzzResult {
  Case kase = Case::A;
  std::uint64_t samples = 0;
  std::uint64_t feasible = 0;        // samples where upper > lower
  std::uint64_t identity_misses = 0; // upper - lower != -certificate at the sample
  std::vector<FuzzPoint> counterexamples;
};

FuzzPoint random_point(Case c, std::uint64_t seed, int max_M);
// upper and lower evaluated from the bound formulas, independently of the certificate polynomial.
std::pair<Rational, Rational> evaluate_sides(Case c, const FuzzPoint& p);
CaseFuzzResult fuzz_case(Case c, std::uint64_t samples, std::uint64_t seed, int max_M = 8);
CaseFuzzResult fuzz_case_serial(Case c, std::uint64_t samples, std::uint64_t seed, int max_M = 8);

// Random admissible states for the degree dominance property.
LadderState random_state(std::uint64_t seed, int max_M);
std::uint64_t dominance_violations(std::uint64_t samples, std::uint64_t seed, int max_M);
std::uint64_t dominance_violations_serial(std::uint64_t samples, std::uint64_t seed, int max_M);

}  // namespace dp2
