#include "dp2/polycore/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dp2 {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

static bool valid_integer(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

static std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view n = trim(text.substr(0, slash));
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_integer(n) || !valid_integer(d) || d.front() == '-' || d.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string ns(n);
  if (ns.front() == '+') ns.erase(0, 1);
  mpz_class nz(ns, 10), dz(std::string(d), 10);
  if (dz == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(nz, dz);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

bool Rational::fits_long() const { return is_integer() && q_.get_num().fits_slong_p(); }

long Rational::to_long() const {
  if (!fits_long()) throw std::overflow_error("rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Rational pow(const Rational& base, unsigned e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace dp2
