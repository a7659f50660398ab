#include "dp2/polycore/field.hpp"

#include <stdexcept>

namespace dp2 {

std::string FieldTag::str() const { return prime == 0 ? "Q" : "F_" + std::to_string(prime); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::int64_t value, std::uint32_t prime) : p(prime) {
  if (prime == 0) throw std::invalid_argument("Fp with zero modulus");
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  v = static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const {
  if (v == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
  std::int64_t a = v, m = p, x0 = 1, x1 = 0;
  while (m) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p);
}

Fp FieldOps<Fp>::from_rational(const Rational& r, const FieldTag& f) {
  mpz_class pz(f.prime);
  mpz_class n = r.num() % pz;
  mpz_class d = r.den() % pz;
  if (d == 0) throw std::domain_error("denominator " + r.den().get_str() + " vanishes mod " + std::to_string(f.prime));
  Fp nn(n.get_si(), f.prime), dd(d.get_si(), f.prime);
  return nn / dd;
}

}  // namespace dp2
