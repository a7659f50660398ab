#include "dp2/polycore/multipoly.hpp"

#include <cctype>

namespace dp2 {

template class Poly<Rational>;
template class Poly<Fp>;

const VarList& global_variable_order() {
  static const VarList order = {"u", "v", "x", "y", "z", "w", "s", "t", "ubar"};
  return order;
}

VarList canonical_var_list(VarList names) {
  const auto& g = global_variable_order();
  auto rank = [&](const std::string& n) {
    auto it = std::find(g.begin(), g.end(), n);
    return it == g.end() ? g.size() : static_cast<std::size_t>(it - g.begin());
  };
  std::stable_sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    auto ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    return ra == g.size() && a < b;
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

PolyFp reduce_mod(const MultiPoly& p, std::uint32_t prime) {
  FieldTag f = FieldTag::modp(prime);
  PolyFp r(p.vars(), f);
  for (const auto& [e, c] : p.terms()) r.add_term(e, FieldOps<Fp>::from_rational(c, f));
  return r;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational s(mpq_class(l, g));
  if (p.leading_coeff().sign() < 0) s = -s;
  return p.scaled(s);
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MultiPoly expr() {
    MultiPoly r(vars_);
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }
  MultiPoly term() {
    MultiPoly r = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        r = r * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
        r = r * factor();
      } else {
        break;
      }
    }
    return r;
  }
  MultiPoly factor() {
    MultiPoly b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }
  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::size_t save = pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) pos_ = save;
      }
      return MultiPoly::constant(vars_, Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (const auto& v : vars_)
        if (v == name) return MultiPoly::variable(vars_, name);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarList& vars) { return PolyParser(text, vars).parse(); }

}  // namespace dp2
