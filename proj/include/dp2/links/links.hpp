#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dp2/fibration/fibration.hpp"
#include "dp2/intersect/intersect.hpp"

namespace dp2 {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RationalExpr {
  MultiPoly num, den;
  std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

struct InvolutionMap {
  std::map<std::string, RationalExpr> substitution;
};

// Substitutes rational images and returns one fraction with a common denominator.
RationalExpr substitute_rational(const MultiPoly& p, const std::map<std::string, RationalExpr>& images);
// Composition of two maps that only move the listed variables.
InvolutionMap compose(const InvolutionMap& outer, const InvolutionMap& inner);

struct InvolutionCertificate {
  bool preserves = false;
  MultiPoly preservation_residual;  // f N^2 + q N D + r D^2 - (f w^2 + q w + r) D^2
  bool involutive = false;
  MultiPoly double_residual;  // numerator of the double application minus w times its denominator
  // The map w -> w - q/f checked the same way.
  MultiPoly printed_preservation_residual;
  MultiPoly printed_double_residual;
};

struct BigInvolution {
  InvolutionMap map;
  InvolutionCertificate certificate;
};

// f, q, r in any ring containing w (with f, q, r free of w).
BigInvolution big_involution(const MultiPoly& f, const MultiPoly& q, const MultiPoly& r);
BigInvolution big_involution(const FibrationModel& m);

// f as a product of its root-class forms; the leading constant sits in the first factor.
struct FactorSplit {
  std::vector<MultiPoly> factors;
  std::vector<int> degrees;
  std::vector<RootClass> roots;
};
FactorSplit factor_split(const FibrationModel& m);

const VarList& model_vars();  // u v x y z w s

struct ModelXI {
  std::vector<int> index_set;  // 1-based, increasing
  ScrollWeights weights;
  long k = 0;  // degree of the product over I
  WeightMatrix ambient;
  MultiPoly eq1, eq2;
  MultiPoly P_I, P_rest;
  bool eq1_homogeneous = false;
  bool eq2_homogeneous = false;
};

ModelXI build_model(const FibrationModel& m, const FactorSplit& split, std::vector<int> index_set);
ModelXI build_model(const FibrationModel& m, std::vector<int> index_set);
// Every model, indexed by subsets in binary order; the parallel variant has identical output.
std::vector<ModelXI> all_models(const FibrationModel& m);
std::vector<ModelXI> all_models_serial(const FibrationModel& m);

// Monic normalization of both equations, for structural comparison.
bool same_model(const ModelXI& a, const ModelXI& b);

struct LinkStep {
  ModelXI from, to;
  int factor = 0;
  InvolutionMap change;  // new (s, w) in terms of old: (s / l, l w) when j joins I, (l s, w / l) when it leaves
  bool eq1_certified = false;
  bool eq2_certified = false;
};

LinkStep link_at(const FibrationModel& m, const FactorSplit& split, const ModelXI& from, int j);

struct EliminationCertificate {
  MultiPoly derived;   // ubar t^2 - q t + r, with ubar the local equation of the fiber
  MultiPoly via_substitution;
  MultiPoly via_resultant;
  bool holds = false;
  MultiPoly printed_residual;  // derived minus ubar t^2 - q w + r
};

struct FiberLink {
  LinkStep step;
  EliminationCertificate elimination;
  std::optional<GeneralityReport> generality;
};

FiberLink fiber_link(const FibrationModel& m, int i, const GeneralityOptions* generality = nullptr);

struct HypersurfaceElimination {
  MultiPoly equation;  // over u v x y z w
  bool bidegree_ok = false;
  bool matches = false;  // equals the expected hypersurface
};
// I empty: s eliminated. I full: w eliminated and s renamed w.
HypersurfaceElimination eliminate_to_hypersurface(const FibrationModel& m, const ModelXI& x);

struct ReembedResult {
  bool applicable = false;
  std::string reason;
  std::vector<std::string> membership_offenders;  // terms of q outside <u,v>^N
  bool membership_holds = false;
  FibrationModel model;
  MultiPoly first_equation;  // u s - v^(N-1) w after the coordinate changes
  bool first_equation_ok = false;
  bool embedding_ok = false;
  bool bidegree_ok = false;
  std::optional<K2Report> k2_before, k2_after;
};

ReembedResult reembed_hypersurface(const FibrationModel& m, const ModelXI& x);

}  // namespace dp2
