#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp2/fibration/fibration.hpp"
#include "dp2/links/links.hpp"
#include "json.hpp"

namespace dp2 {

// ---- TOML subset: tables, arrays of tables, inline tables, arrays, strings, integers, booleans ----

// Line and column for TOML; JSON values carry a JSON pointer instead.
struct TextPos {
  int line = 0, col = 0;
  std::string pointer;
  std::string str() const { return line ? std::to_string(line) + ":" + std::to_string(col) : pointer; }
};

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::optional<TextPos> pos = std::nullopt);
  std::optional<TextPos> pos;
  std::string message;
};

struct TomlNode {
  enum class Kind { table, array, string, integer, boolean };
  Kind kind = Kind::table;
  TextPos pos;
  std::string s;
  long long i = 0;
  bool b = false;
  std::vector<TomlNode> items;                          // arrays
  std::vector<std::pair<std::string, TomlNode>> fields;  // tables, in source order

  const TomlNode* find(const std::string& key) const;
  std::string kind_name() const;
};

TomlNode parse_toml(const std::string& text);

// ---- model documents ----

struct DocTerm {
  Rational coeff;
  std::vector<long> exp;
  TextPos pos;
};

struct DocOptions {
  std::vector<std::uint32_t> primes;
  std::optional<std::uint64_t> seed;
  bool exact = false;
  bool all_models = false;
  bool ladder = false;
  int ladder_max_level = 4;
  friend bool operator==(const DocOptions&, const DocOptions&) = default;
};

struct WeightMatrixOverride {
  VarList columns;
  std::array<std::vector<long>, 2> rows;
  friend bool operator==(const WeightMatrixOverride&, const WeightMatrixOverride&) = default;
};

struct ModelDocument {
  ScrollWeights weights;
  std::optional<WeightMatrixOverride> weight_matrix;
  // Hypersurface: one equation over u v x y z w. Complete intersection: eq1, eq2 over u v x y z w s.
  FibrationModel::Shape shape = FibrationModel::Shape::hypersurface;
  std::vector<int> index_set;
  std::vector<std::vector<DocTerm>> equations;
  DocOptions options;
  std::vector<std::string> warnings;

  const VarList& vars() const;
  MultiPoly equation(std::size_t i = 0) const;
  FibrationModel model() const;
};

bool same_document(const ModelDocument& a, const ModelDocument& b);

// Structural and homogeneity validation; InputError carries the position.
ModelDocument parse_model(const std::string& text, bool json = false);
std::string emit_toml(const ModelDocument& d);
nlohmann::ordered_json emit_json(const ModelDocument& d);

ModelDocument document_from_model(const FibrationModel& m, const DocOptions& opts = {});
ModelDocument document_from_xi(const ModelXI& x, const DocOptions& opts = {});

// ---- pipeline ----

struct PipelineOptions {
  GroebnerOptions groebner;
  std::uint64_t seed = 0;
  bool all_models = false;
  bool ladder = false;
  int ladder_max_level = 4;
};

PipelineOptions pipeline_options(const ModelDocument& d);

struct VerdictReport {
  nlohmann::ordered_json json;
  Status overall = Status::inconclusive;
  bool satisfied = false;  // every hypothesis passes with no boundary flag
  int exit_code() const;   // 0 pass, 1 violated, 2 inconclusive
};

VerdictReport run_pipeline(const ModelDocument& doc, const PipelineOptions& opts);

// ---- fuzz driver ----

struct FuzzRanges {
  long a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0, c_lo = 0, c_hi = 0, ell_lo = 4, ell_hi = 4;
};

struct FuzzModelsResult {
  std::vector<ModelDocument> corpus;
  std::vector<std::string> rejected;
  std::uint64_t corpus_hash = 0;
  std::uint64_t pipeline_runs = 0, passed = 0, violated = 0, inconclusive = 0;
  std::vector<std::string> certificate_failures;
};

// Random homogeneous equations; the pipeline runs on the first run_limit models.
FuzzModelsResult fuzz_models(std::uint64_t count, std::uint64_t seed, const FuzzRanges& ranges,
                             std::uint64_t run_limit, const PipelineOptions& opts);
std::vector<Exponent> bidegree_monomials(const ScrollWeights& w);
std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ULL);

}  // namespace dp2
