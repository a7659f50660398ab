#pragma once

#include <cstdint>
#include <string>

#include "dp2/polycore/rational.hpp"

namespace dp2 {

// prime == 0 means the rationals.
struct FieldTag {
  std::uint32_t prime = 0;

  static FieldTag rationals() { return {}; }
  static FieldTag modp(std::uint32_t p) { return FieldTag{p}; }
  bool is_rational() const { return prime == 0; }
  std::string str() const;
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

bool is_prime(std::uint64_t n);

// Element of Z/p for an odd prime p < 2^31.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  Fp() = default;
  Fp(std::int64_t value, std::uint32_t prime);

  bool is_zero() const { return v == 0; }
  Fp inverse() const;
  std::string str() const { return std::to_string(v); }

  Fp& operator+=(const Fp& o) {
    std::uint32_t s = v + o.v;
    v = s >= p ? s - p : s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v = v >= o.v ? v - o.v : v + p - o.v;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * o.v % p);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const {
    Fp r = *this;
    r.v = v == 0 ? 0 : p - v;
    return r;
  }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
};

// Uniform access to coefficient arithmetic for Rational and Fp.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational from_int(long v, const FieldTag&) { return Rational(v); }
  static Rational from_rational(const Rational& r, const FieldTag&) { return r; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool is_one(const Rational& a) { return a.is_one(); }
  static Rational inverse(const Rational& a) { return a.inverse(); }
  static std::string str(const Rational& a) { return a.str(); }
  static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct FieldOps<Fp> {
  static Fp from_int(long v, const FieldTag& f) { return Fp(v, f.prime); }
  static Fp from_rational(const Rational& r, const FieldTag& f);
  static bool is_zero(const Fp& a) { return a.v == 0; }
  static bool is_one(const Fp& a) { return a.v == 1; }
  static Fp inverse(const Fp& a) { return a.inverse(); }
  static std::string str(const Fp& a) { return a.str(); }
  static bool less(const Fp& a, const Fp& b) { return a.v < b.v; }
};

}  // namespace dp2
