#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp2/polycore/field.hpp"

namespace dp2 {

using Exponent = std::vector<std::uint16_t>;
using VarList = std::vector<std::string>;

// Order of variables that every ring in the artifact follows.
const VarList& global_variable_order();

// Sorts names by the global order; unknown names go last, alphabetically.
VarList canonical_var_list(VarList names);

unsigned total_degree(const Exponent& e);

// Graded reverse lexicographic: a > b.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

template <class K>
class Poly {
 public:
  using Coeff = K;
  using Terms = std::map<Exponent, K, GrevlexGreater>;

  Poly() = default;
  explicit Poly(VarList vars, FieldTag field = {}) : vars_(std::move(vars)), field_(field) {}

  static Poly constant(VarList vars, const K& c, FieldTag field = {}) {
    Poly p(std::move(vars), field);
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static Poly from_int(VarList vars, long c, FieldTag field = {}) {
    return constant(std::move(vars), FieldOps<K>::from_int(c, field), field);
  }
  static Poly variable(VarList vars, std::string_view name, FieldTag field = {}) {
    Poly p(std::move(vars), field);
    int i = p.var_index(name);
    if (i < 0) throw std::invalid_argument("variable '" + std::string(name) + "' not in ring");
    Exponent e(p.vars_.size(), 0);
    e[i] = 1;
    p.add_term(e, FieldOps<K>::from_int(1, field));
    return p;
  }

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  FieldTag field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && dp2::total_degree(terms_.begin()->first) == 0); }
  int var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }
  int require_var(std::string_view name) const {
    int i = var_index(name);
    if (i < 0) throw std::invalid_argument("variable '" + std::string(name) + "' not in ring");
    return i;
  }

  K zero_coeff() const { return FieldOps<K>::from_int(0, field_); }
  K one_coeff() const { return FieldOps<K>::from_int(1, field_); }
  Poly zero() const { return Poly(vars_, field_); }
  Poly one() const { return constant(vars_, one_coeff(), field_); }
  Poly scalar(const K& c) const { return constant(vars_, c, field_); }
  Poly var(std::string_view name) const { return variable(vars_, name, field_); }

  K constant_term() const {
    auto it = terms_.find(Exponent(vars_.size(), 0));
    return it == terms_.end() ? zero_coeff() : it->second;
  }
  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_coeff() : it->second;
  }
  const Exponent& leading_exponent() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  const K& leading_coeff() const {
    require_nonzero();
    return terms_.begin()->second;
  }

  void add_term(const Exponent& e, const K& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
    if (FieldOps<K>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (FieldOps<K>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.vars_, a.field_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly operator-() const {
    Poly r(vars_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  Poly scaled(const K& c) const {
    Poly r(vars_, field_);
    if (FieldOps<K>::is_zero(c)) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
  }
  Poly pow(unsigned k) const {
    Poly r = one();
    Poly b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      k >>= 1u;
      if (k) b = b * b;
    }
    return r;
  }
  Poly times_monomial(const Exponent& m, const K& c) const {
    Poly r(vars_, field_);
    if (FieldOps<K>::is_zero(c)) return r;
    Exponent e(m.size());
    for (const auto& [ea, ca] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + m[i]);
      r.terms_.emplace(e, ca * c);
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(dp2::total_degree(e)));
    return d;
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Poly derivative(std::size_t var) const {
    Poly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      --d[var];
      r.add_term(d, c * FieldOps<K>::from_int(e[var], field_));
    }
    return r;
  }

  // Coefficients of var^k, k = 0..deg; the variable keeps its slot with exponent 0.
  std::vector<Poly> coefficients_in(std::size_t var) const {
    int d = std::max(degree_in(var), 0);
    std::vector<Poly> out(d + 1, Poly(vars_, field_));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[var] = 0;
      out[e[var]].terms_.emplace(f, c);
    }
    return out;
  }

  Poly evaluate(std::size_t var, const K& value) const {
    Poly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[var] = 0;
      K v = c;
      for (unsigned k = 0; k < e[var]; ++k) v *= value;
      r.add_term(f, v);
    }
    return r;
  }

  K evaluate_all(std::span<const K> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("point dimension mismatch");
    K s = zero_coeff();
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      s += t;
    }
    return s;
  }

  // Images must share one variable list; unassigned variables map to themselves.
  Poly substitute(const std::map<std::string, Poly>& assignments) const {
    VarList target = vars_;
    FieldTag field = field_;
    if (!assignments.empty()) {
      target = assignments.begin()->second.vars_;
      field = assignments.begin()->second.field_;
      for (const auto& [name, img] : assignments)
        if (img.vars_ != target) throw std::invalid_argument("substitution images use different rings");
    }
    std::vector<std::vector<Poly>> powers(vars_.size());
    std::vector<const Poly*> base(vars_.size(), nullptr);
    std::vector<Poly> own;
    own.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = assignments.find(vars_[i]);
      if (it != assignments.end()) {
        base[i] = &it->second;
      } else if (degree_in(i) > 0) {
        own.push_back(variable(target, vars_[i], field));
        base[i] = &own.back();
      }
    }
    auto power = [&](std::size_t i, unsigned k) -> const Poly& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, FieldOps<K>::from_int(1, field), field));
      while (pw.size() <= k) pw.push_back(pw.back() * *base[i]);
      return pw[k];
    };
    Poly r(target, field);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(target, c, field);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t = t * power(i, e[i]);
      r += t;
    }
    return r;
  }

  // Re-express in a ring whose variable list contains every variable that occurs.
  Poly embed(const VarList& target) const {
    std::vector<int> map(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = 0; j < target.size(); ++j)
        if (target[j] == vars_[i]) map[i] = static_cast<int>(j);
      if (map[i] < 0 && degree_in(i) > 0)
        throw std::invalid_argument("variable '" + vars_[i] + "' missing from target ring");
    }
    Poly r(target, field_);
    for (const auto& [e, c] : terms_) {
      Exponent f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) f[map[i]] = e[i];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(FieldOps<K>::inverse(leading_coeff()));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = FieldOps<K>::str(c);
      bool neg = !cs.empty() && cs.front() == '-';
      if (neg) cs.erase(0, 1);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  }
  void check_compatible(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomials live in different rings");
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
  }

  VarList vars_;
  FieldTag field_;
  Terms terms_;
};

using MultiPoly = Poly<Rational>;
using PolyFp = Poly<Fp>;

PolyFp reduce_mod(const MultiPoly& p, std::uint32_t prime);

// Parses a polynomial written with +, -, *, ^, integer or n/d coefficients and
// parentheses over the given ring. Intended for tests and hand-written inputs.
MultiPoly parse_poly(std::string_view text, const VarList& vars);

// Removes a common positive-integer content and makes the leading coefficient positive.
MultiPoly primitive_part(const MultiPoly& p);

extern template class Poly<Rational>;
extern template class Poly<Fp>;

}  // namespace dp2
