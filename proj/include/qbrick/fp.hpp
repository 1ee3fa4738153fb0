#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qbrick {

/// Error type thrown on contract violations (bad input, out-of-scope
/// algebra, infeasible request). The CLI maps these to exit code 2.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic in the prime field F_p for word-sized p.  Elements are
/// canonical representatives in [0, p).  p is capped at 2^31 - 1 so a
/// product of two representatives fits in 64 bits.
namespace fp {

constexpr uint64_t kMaxPrime = 2147483647ull;  // 2^31 - 1, the default modulus

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint64_t neg(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

inline uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Multiplicative inverse by extended Euclid; throws on 0.
inline uint64_t inv(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) throw error("fp::inv: division by zero mod " + std::to_string(p));
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a);
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

/// Canonical representative of a signed integer.
inline uint64_t reduce_int(int64_t v, uint64_t p) {
  int64_t m = v % static_cast<int64_t>(p);
  if (m < 0) m += static_cast<int64_t>(p);
  return static_cast<uint64_t>(m);
}

/// Deterministic Miller-Rabin, valid for all n <= 2^31 - 1
/// (bases 2, 3, 5, 7 have no composite pseudoprime below 3.2e9).
inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace fp

/// The ground field of a computation: F_p for a prime p <= 2^31 - 1.
/// Stands in for an algebraically closed field; genericity statements
/// become Schwartz-Zippel bounds (a fixed nonzero polynomial condition
/// fails on a uniform sample with probability <= deg/p).
struct FieldSpec {
  uint64_t p = fp::kMaxPrime;

  FieldSpec() = default;
  explicit FieldSpec(uint64_t prime) : p(prime) { validate(); }

  void validate() const {
    if (p < 2 || p > fp::kMaxPrime || !fp::is_prime(p))
      throw error("FieldSpec: modulus " + std::to_string(p) +
                  " is not a prime in [2, 2^31-1]");
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace qbrick
