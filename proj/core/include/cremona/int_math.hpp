#ifndef CREMONA_INT_MATH_HPP
#define CREMONA_INT_MATH_HPP

#include <cstdint>
#include <numeric>

#include "cremona/errors.hpp"

namespace cremona {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

/// Exact rational number on checked 64-bit integers; denominator > 0,
/// always in lowest terms.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = checked_sub(0, num);
      den = checked_sub(0, den);
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw DomainError("rational division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
  bool negative() const { return num < 0; }
  bool zero() const { return num == 0; }
};

}  // namespace cremona

#endif
