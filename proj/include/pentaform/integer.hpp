#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pentaform {

using Int = std::int64_t;

/// Malformed input: bad files, invalid forms, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical claim that was supposed to hold did not.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

/// Narrow a 128-bit intermediate, throwing if it does not fit.
inline Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow narrowing 128-bit value");
  return static_cast<Int>(v);
}

/// Least non-negative residue.
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// floor(sqrt(n)) for n >= 0, exact.
inline Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Returns sqrt(n) if n is a perfect square, else -1.
inline Int exact_sqrt(Int n) {
  if (n < 0) return -1;
  Int r = isqrt(n);
  return r * r == n ? r : -1;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// Multiplicative inverse of a modulo m (m > 1, gcd(a,m) = 1).
inline Int inverse_mod(Int a, Int m) {
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
  return mod(old_s, m);
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace pentaform
