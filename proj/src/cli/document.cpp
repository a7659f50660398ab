#include <algorithm>
#include <map>
#include <sstream>

#include "dp2/cli/cli.hpp"
#include "dp2/polycore/grading.hpp"

namespace dp2 {

namespace {

using Kind = TomlNode::Kind;
using ojson = nlohmann::ordered_json;

const VarList& ci_vars() { return model_vars(); }

[[noreturn]] void bad(const std::string& what, const TomlNode& n) { throw InputError(what, n.pos); }

const TomlNode& need(const TomlNode& t, const std::string& key) {
  const TomlNode* n = t.find(key);
  if (!n) throw InputError("missing key '" + key + "'", t.pos);
  return *n;
}

long as_int(const TomlNode& n, const std::string& what) {
  if (n.kind != Kind::integer) bad(what + " must be an integer, found " + n.kind_name(), n);
  return static_cast<long>(n.i);
}

bool as_bool(const TomlNode& n, const std::string& what) {
  if (n.kind != Kind::boolean) bad(what + " must be true or false, found " + n.kind_name(), n);
  return n.b;
}

const TomlNode& as_array(const TomlNode& n, const std::string& what) {
  if (n.kind != Kind::array) bad(what + " must be an array, found " + n.kind_name(), n);
  return n;
}

void only_keys(const TomlNode& t, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : t.fields) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) bad("unknown key '" + k + "' in " + where, v);
  }
}

TomlNode json_node(const nlohmann::json& j, const std::string& ptr) {
  TomlNode n;
  n.pos.pointer = ptr.empty() ? "/" : ptr;
  if (j.is_object()) {
    n.kind = Kind::table;
    for (auto it = j.begin(); it != j.end(); ++it)
      n.fields.emplace_back(it.key(), json_node(it.value(), ptr + "/" + it.key()));
  } else if (j.is_array()) {
    n.kind = Kind::array;
    for (std::size_t i = 0; i < j.size(); ++i) n.items.push_back(json_node(j[i], ptr + "/" + std::to_string(i)));
  } else if (j.is_string()) {
    n.kind = Kind::string;
    n.s = j.get<std::string>();
  } else if (j.is_boolean()) {
    n.kind = Kind::boolean;
    n.b = j.get<bool>();
  } else if (j.is_number_integer()) {
    n.kind = Kind::integer;
    n.i = j.get<long long>();
  } else {
    throw InputError(j.is_null() ? "null is not a valid value" : "only integers are allowed; write rationals as strings",
                     n.pos);
  }
  return n;
}

TomlNode parse_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    TextPos p{1, 1, {}};
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++p.line;
        p.col = 1;
      } else {
        ++p.col;
      }
    }
    std::string what = e.what();
    auto cut = what.find("parse error");
    throw InputError("invalid JSON: " + (cut == std::string::npos ? what : what.substr(cut)), p);
  }
  if (!j.is_object()) throw InputError("top level must be an object", TextPos{0, 0, "/"});
  return json_node(j, "");
}

std::vector<DocTerm> parse_terms(const TomlNode& arr, std::size_t nvars, const std::string& name,
                                 std::vector<std::string>& warnings) {
  as_array(arr, name);
  std::vector<DocTerm> out;
  std::map<std::vector<long>, std::size_t> seen;
  for (const auto& t : arr.items) {
    if (t.kind != Kind::table) bad("each term of " + name + " must be a table {coeff, exp}", t);
    only_keys(t, {"coeff", "exp"}, "a term");
    const TomlNode& c = need(t, "coeff");
    if (c.kind != Kind::string) bad("coeff must be a string such as \"-3/2\"", c);
    DocTerm d;
    d.pos = t.pos;
    try {
      d.coeff = Rational::parse(c.s);
    } catch (const std::exception&) {
      bad("coeff '" + c.s + "' is not an exact rational", c);
    }
    const TomlNode& e = as_array(need(t, "exp"), "exp");
    if (e.items.size() != nvars)
      bad("exponent vector has length " + std::to_string(e.items.size()) + ", expected " + std::to_string(nvars), e);
    for (const auto& x : e.items) {
      long v = as_int(x, "exponent");
      if (v < 0 || v > 60000) bad("exponent out of range", x);
      d.exp.push_back(v);
    }
    auto it = seen.find(d.exp);
    if (it != seen.end()) {
      DocTerm& first = out[it->second];
      first.coeff = first.coeff + d.coeff;
      warnings.push_back(t.pos.str() + ": duplicate monomial merged into the term at " + first.pos.str());
      continue;
    }
    seen.emplace(d.exp, out.size());
    out.push_back(d);
  }
  std::vector<DocTerm> kept;
  for (auto& d : out) {
    if (d.coeff.is_zero()) {
      warnings.push_back(d.pos.str() + ": term cancels to zero and is dropped");
      continue;
    }
    kept.push_back(std::move(d));
  }
  if (kept.empty()) bad(name + " is the zero polynomial", arr);
  return kept;
}

void check_homogeneous(const std::vector<DocTerm>& terms, const VarList& vars, const WeightMatrix& wm,
                       const Bidegree& expected, const std::string& name, const TomlNode& where) {
  std::vector<std::string> offenders;
  for (const auto& t : terms) {
    Bidegree d{0, 0};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int col = wm.column(vars[i]);
      d.base += t.exp[i] * wm.base()[static_cast<std::size_t>(col)];
      d.fiber += t.exp[i] * wm.fiber()[static_cast<std::size_t>(col)];
    }
    if (d != expected) offenders.push_back(t.pos.str() + " has degree " + d.str());
  }
  if (offenders.empty()) return;
  std::string msg = name + " is not homogeneous of degree " + expected.str() + ":";
  for (const auto& o : offenders) msg += "\n  term at " + o;
  throw InputError(msg, where.pos);
}

WeightMatrix override_matrix(const WeightMatrixOverride& o, bool ci) {
  if (ci) return WeightMatrix(o.columns, o.rows, 1, {"u", "v"}, {"x", "y", "z", "w", "s"});
  return WeightMatrix(o.columns, o.rows, 1, {"u", "v"}, {"x", "y", "z", "w"});
}

}  // namespace

const VarList& ModelDocument::vars() const {
  if (shape == FibrationModel::Shape::complete_intersection) return ci_vars();
  if (weight_matrix) return weight_matrix->columns;
  return scroll_vars();
}

MultiPoly ModelDocument::equation(std::size_t i) const {
  const VarList& v = vars();
  MultiPoly p(v);
  for (const auto& t : equations.at(i)) {
    Exponent e(t.exp.begin(), t.exp.end());
    MultiPoly m(v);
    m.add_term(e, t.coeff);
    p += m;
  }
  return p;
}

FibrationModel ModelDocument::model() const {
  FibrationModel m;
  m.weights = weights;
  m.shape = shape;
  m.index_set = index_set;
  if (shape == FibrationModel::Shape::complete_intersection) {
    m.equation = equation(0);
    return m;
  }
  m.equation = equation(0).embed(scroll_vars());
  return m;
}

bool same_document(const ModelDocument& a, const ModelDocument& b) {
  if (!(a.weights == b.weights && a.weight_matrix == b.weight_matrix && a.shape == b.shape &&
        a.index_set == b.index_set && a.options == b.options && a.equations.size() == b.equations.size()))
    return false;
  for (std::size_t i = 0; i < a.equations.size(); ++i) {
    if (a.equations[i].size() != b.equations[i].size()) return false;
    for (std::size_t j = 0; j < a.equations[i].size(); ++j)
      if (!(a.equations[i][j].coeff == b.equations[i][j].coeff && a.equations[i][j].exp == b.equations[i][j].exp))
        return false;
  }
  return true;
}

ModelDocument parse_model(const std::string& text, bool json) {
  TomlNode root = json ? parse_json_text(text) : parse_toml(text);
  ModelDocument d;
  only_keys(root, {"weights", "ell", "weight_matrix", "equation", "eq1", "eq2", "index_set", "k", "options"},
            "the document");

  d.weights.ell = as_int(need(root, "ell"), "ell");
  const TomlNode* wn = root.find("weights");
  if (wn) {
    if (wn->kind != Kind::table) bad("weights must be a table {a, b, c}", *wn);
    only_keys(*wn, {"a", "b", "c"}, "weights");
    d.weights.a = as_int(need(*wn, "a"), "a");
    d.weights.b = as_int(need(*wn, "b"), "b");
    d.weights.c = as_int(need(*wn, "c"), "c");
  }

  bool ci = root.find("eq1") || root.find("eq2");
  if (ci && root.find("equation")) bad("a document has either 'equation' or 'eq1'/'eq2'", *root.find("equation"));
  if (!ci && !root.find("equation")) throw InputError("missing key 'equation'", root.pos);
  d.shape = ci ? FibrationModel::Shape::complete_intersection : FibrationModel::Shape::hypersurface;

  if (const TomlNode* m = root.find("weight_matrix")) {
    if (m->kind != Kind::table) bad("weight_matrix must be a table {columns, rows}", *m);
    only_keys(*m, {"columns", "rows"}, "weight_matrix");
    WeightMatrixOverride o;
    for (const auto& c : as_array(need(*m, "columns"), "columns").items) {
      if (c.kind != Kind::string) bad("column names must be strings", c);
      o.columns.push_back(c.s);
    }
    const TomlNode& rows = as_array(need(*m, "rows"), "rows");
    if (rows.items.size() != 2) bad("weight_matrix needs exactly two rows", rows);
    for (int r = 0; r < 2; ++r) {
      const TomlNode& row = as_array(rows.items[static_cast<std::size_t>(r)], "row");
      if (row.items.size() != o.columns.size()) bad("row length differs from the number of columns", row);
      for (const auto& x : row.items) o.rows[static_cast<std::size_t>(r)].push_back(as_int(x, "weight"));
    }
    VarList expected = ci ? ci_vars() : scroll_vars();
    VarList sorted = o.columns;
    std::sort(sorted.begin(), sorted.end());
    VarList want = expected;
    std::sort(want.begin(), want.end());
    if (sorted != want) bad("weight_matrix columns must be a permutation of the ring variables", *m);
    try {
      WeightMatrix wm = override_matrix(o, ci);
      if (ci) {
        // Complete intersections carry V_k verbatim.
        d.weight_matrix = o;
      } else {
        WellFormResult wf = well_form(wm);
        if (!wf.main_shape) bad("weight_matrix does not normalize to a P(1,1,1,2)-bundle", *m);
        if (wn && !(wf.weights.a == d.weights.a && wf.weights.b == d.weights.b && wf.weights.c == d.weights.c))
          bad("weights disagree with the normalized weight_matrix " + wf.matrix.str(), *wn);
        d.weights.a = wf.weights.a;
        d.weights.b = wf.weights.b;
        d.weights.c = wf.weights.c;
        if (!std::is_sorted(wf.permutation.begin(), wf.permutation.end()) || o.columns != scroll_vars())
          bad("weight_matrix must list u v x y z w in order with x, y, z already sorted by weight", *m);
        d.weight_matrix = o;
      }
    } catch (const std::invalid_argument& e) {
      bad(std::string("weight_matrix: ") + e.what(), *m);
    }
  } else if (!wn) {
    throw InputError("missing key 'weights'", root.pos);
  }

  if (ci) {
    const TomlNode& k = need(root, "k");
    long kv = as_int(k, "k");
    const TomlNode& is = as_array(need(root, "index_set"), "index_set");
    for (const auto& x : is.items) {
      long v = as_int(x, "index");
      if (v < 1) bad("indices start at 1", x);
      d.index_set.push_back(static_cast<int>(v));
    }
    if (!std::is_sorted(d.index_set.begin(), d.index_set.end()) ||
        std::adjacent_find(d.index_set.begin(), d.index_set.end()) != d.index_set.end())
      bad("index_set must be strictly increasing", is);
    WeightMatrix V = WeightMatrix::enlarged(d.weights, kv);
    if (d.weight_matrix && !(d.weight_matrix->columns == V.columns() && d.weight_matrix->rows == V.rows()))
      bad("weight_matrix differs from V_k for these weights", *root.find("weight_matrix"));
    d.weight_matrix = WeightMatrixOverride{V.columns(), V.rows()};
    for (const char* key : {"eq1", "eq2"}) {
      const TomlNode& n = need(root, key);
      d.equations.push_back(parse_terms(n, ci_vars().size(), key, d.warnings));
    }
    check_homogeneous(d.equations[0], ci_vars(), V, Bidegree{d.weights.c + d.weights.N(), 2}, "eq1", need(root, "eq1"));
    check_homogeneous(d.equations[1], ci_vars(), V, Bidegree{d.weights.ell, 4}, "eq2", need(root, "eq2"));
  } else {
    if (root.find("index_set") || root.find("k")) bad("index_set and k belong to complete intersections", root);
    const TomlNode& n = need(root, "equation");
    d.equations.push_back(parse_terms(n, d.vars().size(), "equation", d.warnings));
    WeightMatrix wm = WeightMatrix::main_scroll(d.weights);
    check_homogeneous(d.equations[0], d.vars(), wm, Bidegree{d.weights.ell, 4}, "equation", n);
    MembershipReport mr = validate_membership(d.model().equation, wm, Bidegree{d.weights.ell, 4});
    for (const auto& msg : mr.messages)
      if (mr.status == MembershipReport::Status::warn) d.warnings.push_back(msg);
  }

  if (const TomlNode* o = root.find("options")) {
    if (o->kind != Kind::table) bad("options must be a table", *o);
    only_keys(*o, {"primes", "seed", "exact", "all_models", "ladder", "ladder_max_level"}, "options");
    if (const TomlNode* p = o->find("primes")) {
      for (const auto& x : as_array(*p, "primes").items) {
        long v = as_int(x, "prime");
        if (v < 3 || v > 2147483647 || !is_prime(static_cast<std::uint32_t>(v))) bad("not an odd prime", x);
        d.options.primes.push_back(static_cast<std::uint32_t>(v));
      }
    }
    if (const TomlNode* s = o->find("seed")) {
      long v = as_int(*s, "seed");
      if (v < 0) bad("seed must be nonnegative", *s);
      d.options.seed = static_cast<std::uint64_t>(v);
    }
    if (const TomlNode* x = o->find("exact")) d.options.exact = as_bool(*x, "exact");
    if (const TomlNode* x = o->find("all_models")) d.options.all_models = as_bool(*x, "all_models");
    if (const TomlNode* x = o->find("ladder")) d.options.ladder = as_bool(*x, "ladder");
    if (const TomlNode* x = o->find("ladder_max_level")) {
      long v = as_int(*x, "ladder_max_level");
      if (v < 1 || v > 10) bad("ladder_max_level must lie in 1..10", *x);
      d.options.ladder_max_level = static_cast<int>(v);
    }
  }
  return d;
}

namespace {

std::string toml_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string list(const std::vector<T>& v, bool quote = false) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_same_v<T, std::string>) {
      out += quote ? toml_string(v[i]) : v[i];
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out + "]";
}

void emit_terms(std::ostringstream& os, const std::string& key, const std::vector<DocTerm>& terms) {
  os << key << " = [\n";
  for (const auto& t : terms) os << "  { coeff = " << toml_string(t.coeff.str()) << ", exp = " << list(t.exp) << " },\n";
  os << "]\n";
}

ojson json_terms(const std::vector<DocTerm>& terms) {
  ojson a = ojson::array();
  for (const auto& t : terms) a.push_back({{"coeff", t.coeff.str()}, {"exp", t.exp}});
  return a;
}

std::vector<DocTerm> terms_of(const MultiPoly& p) {
  std::vector<DocTerm> out;
  for (const auto& [e, c] : p.terms()) out.push_back({c, std::vector<long>(e.begin(), e.end()), {}});
  return out;
}

}  // namespace

std::string emit_toml(const ModelDocument& d) {
  std::ostringstream os;
  const bool ci = d.shape == FibrationModel::Shape::complete_intersection;
  os << "weights = { a = " << d.weights.a << ", b = " << d.weights.b << ", c = " << d.weights.c << " }\n";
  os << "ell = " << d.weights.ell << "\n";
  if (ci) {
    os << "index_set = " << list(d.index_set) << "\n";
    os << "k = " << d.weight_matrix->rows[0][5] - d.weights.c << "\n";
  }
  if (d.weight_matrix)
    os << "weight_matrix = { columns = " << list(d.weight_matrix->columns, true) << ", rows = ["
       << list(d.weight_matrix->rows[0]) << ", " << list(d.weight_matrix->rows[1]) << "] }\n";
  if (ci) {
    emit_terms(os, "eq1", d.equations.at(0));
    emit_terms(os, "eq2", d.equations.at(1));
  } else {
    emit_terms(os, "equation", d.equations.at(0));
  }
  os << "\n[options]\n";
  if (!d.options.primes.empty()) os << "primes = " << list(d.options.primes) << "\n";
  if (d.options.seed) os << "seed = " << *d.options.seed << "\n";
  os << "exact = " << (d.options.exact ? "true" : "false") << "\n";
  os << "all_models = " << (d.options.all_models ? "true" : "false") << "\n";
  os << "ladder = " << (d.options.ladder ? "true" : "false") << "\n";
  os << "ladder_max_level = " << d.options.ladder_max_level << "\n";
  return os.str();
}

ojson emit_json(const ModelDocument& d) {
  const bool ci = d.shape == FibrationModel::Shape::complete_intersection;
  ojson j;
  j["weights"] = {{"a", d.weights.a}, {"b", d.weights.b}, {"c", d.weights.c}};
  j["ell"] = d.weights.ell;
  if (ci) {
    j["index_set"] = d.index_set;
    j["k"] = d.weight_matrix->rows[0][5] - d.weights.c;
  }
  if (d.weight_matrix) j["weight_matrix"] = {{"columns", d.weight_matrix->columns}, {"rows", d.weight_matrix->rows}};
  if (ci) {
    j["eq1"] = json_terms(d.equations.at(0));
    j["eq2"] = json_terms(d.equations.at(1));
  } else {
    j["equation"] = json_terms(d.equations.at(0));
  }
  ojson o;
  if (!d.options.primes.empty()) o["primes"] = d.options.primes;
  if (d.options.seed) o["seed"] = *d.options.seed;
  o["exact"] = d.options.exact;
  o["all_models"] = d.options.all_models;
  o["ladder"] = d.options.ladder;
  o["ladder_max_level"] = d.options.ladder_max_level;
  j["options"] = o;
  return j;
}

ModelDocument document_from_model(const FibrationModel& m, const DocOptions& opts) {
  ModelDocument d;
  d.weights = m.weights;
  d.options = opts;
  d.equations.push_back(terms_of(m.equation.embed(scroll_vars())));
  return d;
}

ModelDocument document_from_xi(const ModelXI& x, const DocOptions& opts) {
  ModelDocument d;
  d.weights = x.weights;
  d.shape = FibrationModel::Shape::complete_intersection;
  d.index_set = x.index_set;
  d.weight_matrix = WeightMatrixOverride{x.ambient.columns(), x.ambient.rows()};
  d.options = opts;
  d.equations.push_back(terms_of(x.eq1.embed(model_vars())));
  d.equations.push_back(terms_of(x.eq2.embed(model_vars())));
  return d;
}

}  // namespace dp2
