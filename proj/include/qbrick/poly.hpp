#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qbrick/fp.hpp"
#include "qbrick/mat.hpp"
#include "qbrick/rng.hpp"

namespace qbrick {

/// Univariate polynomial over F_p, coefficients ascending, normalized
/// (no trailing zeros; the zero polynomial has an empty coefficient list).
struct Poly {
  std::vector<uint64_t> c;

  static Poly zero() { return {}; }
  static Poly constant(uint64_t v, uint64_t p) {
    Poly f;
    v %= p;
    if (v) f.c = {v};
    return f;
  }
  static Poly x(uint64_t p) {
    Poly f;
    f.c = {0, 1 % p};
    return f;
  }

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  uint64_t lead() const { return c.back(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const Poly&) const = default;
};

namespace poly {

inline Poly add(const Poly& a, const Poly& b, uint64_t p) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t av = i < a.c.size() ? a.c[i] : 0;
    uint64_t bv = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = fp::add(av, bv, p);
  }
  r.normalize();
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, uint64_t p) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t av = i < a.c.size() ? a.c[i] : 0;
    uint64_t bv = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = fp::sub(av, bv, p);
  }
  r.normalize();
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, uint64_t p) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  r.normalize();
  return r;
}

inline Poly scale(const Poly& a, uint64_t v, uint64_t p) {
  Poly r = a;
  for (auto& x : r.c) x = fp::mul(x, v, p);
  r.normalize();
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, uint64_t p) {
  if (b.is_zero()) throw error("poly::divmod: division by zero polynomial");
  Poly rem = a, quo;
  int db = b.deg();
  uint64_t binv = fp::inv(b.lead(), p);
  if (rem.deg() >= db) quo.c.assign(rem.deg() - db + 1, 0);
  while (rem.deg() >= db) {
    int shift = rem.deg() - db;
    uint64_t f = fp::mul(rem.lead(), binv, p);
    quo.c[shift] = f;
    for (int i = 0; i <= db; ++i)
      rem.c[shift + i] = fp::sub(rem.c[shift + i], fp::mul(f, b.c[i], p), p);
    rem.normalize();
  }
  quo.normalize();
  return {quo, rem};
}

inline Poly mod(const Poly& a, const Poly& b, uint64_t p) {
  return divmod(a, b, p).second;
}

inline Poly monic(const Poly& a, uint64_t p) {
  if (a.is_zero()) return a;
  return scale(a, fp::inv(a.lead(), p), p);
}

inline Poly gcd(Poly a, Poly b, uint64_t p) {
  while (!b.is_zero()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

inline Poly derivative(const Poly& a, uint64_t p) {
  Poly r;
  if (a.deg() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = fp::mul(a.c[i], i % p, p);
  r.normalize();
  return r;
}

inline uint64_t eval(const Poly& a, uint64_t x, uint64_t p) {
  uint64_t r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = (r * x + a.c[i]) % p;
  return r;
}

inline Poly pow_mod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
  Poly r = Poly::constant(1, p);
  base = mod(base, f, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

/// g^(p^k) mod f, by k-fold p-th powering.
inline Poly frobenius_pow(Poly g, uint64_t k, const Poly& f, uint64_t p) {
  for (uint64_t i = 0; i < k; ++i) g = pow_mod(g, p, f, p);
  return g;
}

/// Evaluate f at a square matrix (Horner).
inline Mat eval_mat(const Poly& f, const Mat& a) {
  size_t n = a.rows();
  Mat r(n, n, a.p());
  for (size_t i = f.c.size(); i-- > 0;) {
    r = r * a;
    if (f.c[i]) r = r + Mat::identity(n, a.p()).scaled(f.c[i]);
  }
  return r;
}

/// Characteristic polynomial (monic, det(xI - A)) via Hessenberg
/// reduction and the leading-minor recurrence; O(n^3) field operations.
inline Poly charpoly(Mat a) {
  size_t n = a.rows();
  if (a.cols() != n) throw error("poly::charpoly: square matrix required");
  uint64_t p = a.p();
  if (n == 0) return Poly::constant(1, p);

  // Similarity reduction to upper Hessenberg form.
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = j + 1;
    while (piv < n && a.at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(j + 1, c));
      for (size_t r = 0; r < n; ++r) std::swap(a.at(r, piv), a.at(r, j + 1));
    }
    uint64_t inv = fp::inv(a.at(j + 1, j), p);
    for (size_t i = j + 2; i < n; ++i) {
      uint64_t t = fp::mul(a.at(i, j), inv, p);
      if (!t) continue;
      // rows: R_i -= t R_{j+1}; columns: C_{j+1} += t C_i  (similarity pair)
      for (size_t c = 0; c < n; ++c)
        a.at(i, c) = fp::sub(a.at(i, c), fp::mul(t, a.at(j + 1, c), p), p);
      for (size_t r = 0; r < n; ++r)
        a.at(r, j + 1) = fp::add(a.at(r, j + 1), fp::mul(t, a.at(r, i), p), p);
    }
  }

  // p_m = (x - h[m,m]) p_{m-1} - sum_i h[i,m] (prod subdiag) p_{i-1}
  std::vector<Poly> ps(n + 1);
  ps[0] = Poly::constant(1, p);
  for (size_t m = 1; m <= n; ++m) {
    Poly t = mul(sub(Poly::x(p), Poly::constant(a.at(m - 1, m - 1), p), p),
                 ps[m - 1], p);
    uint64_t prod = 1 % p;
    for (size_t i = m - 1; i >= 1; --i) {
      prod = fp::mul(prod, a.at(i, i - 1), p);
      if (!prod) break;
      uint64_t coef = fp::mul(a.at(i - 1, m - 1), prod, p);
      if (coef) t = sub(t, scale(ps[i - 1], coef, p), p);
    }
    ps[m] = std::move(t);
  }
  return ps[n];
}

namespace detail {

/// Squarefree decomposition in characteristic p.  Returns (monic
/// squarefree factor, multiplicity) pairs with pairwise coprime factors.
inline void squarefree_rec(const Poly& f, uint64_t mult_base, uint64_t p,
                           std::vector<std::pair<Poly, uint64_t>>& out) {
  if (f.deg() <= 0) return;
  Poly d = derivative(f, p);
  if (d.is_zero()) {
    // f = g(x^p); over the prime field the p-th root keeps coefficients.
    Poly g;
    g.c.resize(f.deg() / static_cast<int>(p) + 1, 0);
    for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.c[i * p];
    g.normalize();
    squarefree_rec(g, mult_base * p, p, out);
    return;
  }
  Poly c = gcd(f, d, p);
  Poly w = divmod(f, c, p).first;
  uint64_t i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c, p);
    Poly z = divmod(w, y, p).first;
    if (z.deg() > 0) out.emplace_back(monic(z, p), mult_base * i);
    ++i;
    w = std::move(y);
    c = divmod(c, w, p).first;
  }
  // leftover c is a p-th power; the zero-derivative branch of the
  // recursion extracts the root and scales the multiplicity.
  if (c.deg() > 0) squarefree_rec(c, mult_base, p, out);
}

/// Split a product of distinct irreducibles of equal degree d
/// (Cantor-Zassenhaus; trace map for p = 2).  Deterministic given key.
inline void equal_degree_rec(const Poly& f, int d, uint64_t p, uint64_t key,
                             uint64_t& counter, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(monic(f, p));
    return;
  }
  while (true) {
    Poly r;
    r.c.resize(f.deg(), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
      r.c[i] = rng::uniform(key, counter++, p);
    r.normalize();
    if (r.deg() < 1) continue;
    Poly s;
    if (p == 2) {
      // trace map: r + r^2 + r^4 + ... + r^(2^(d-1))
      Poly t = mod(r, f, p), acc = t;
      for (int i = 1; i < d; ++i) {
        t = mod(mul(t, t, p), f, p);
        acc = add(acc, t, p);
      }
      s = gcd(acc, f, p);
    } else {
      // norm to F_p^d then power to (p-1)/2: r^((p^d-1)/2) computed as
      // (r * r^p * ... * r^(p^(d-1)))^((p-1)/2)
      Poly norm = mod(r, f, p);
      Poly t = norm;
      for (int i = 1; i < d; ++i) {
        t = frobenius_pow(t, 1, f, p);
        norm = mod(mul(norm, t, p), f, p);
      }
      Poly e = pow_mod(norm, (p - 1) / 2, f, p);
      s = gcd(sub(e, Poly::constant(1, p), p), f, p);
    }
    if (s.deg() > 0 && s.deg() < f.deg()) {
      equal_degree_rec(s, d, p, key, counter, out);
      equal_degree_rec(divmod(f, s, p).first, d, p, key, counter, out);
      return;
    }
  }
}

}  // namespace detail

/// Full factorization into monic irreducibles with multiplicities,
/// deterministic given `key`.  Factors sorted by (degree, coefficients).
inline std::vector<std::pair<Poly, uint64_t>> factor(const Poly& f, uint64_t p,
                                                     uint64_t key) {
  std::vector<std::pair<Poly, uint64_t>> result;
  if (f.deg() < 1) return result;
  std::vector<std::pair<Poly, uint64_t>> sqfree;
  detail::squarefree_rec(monic(f, p), 1, p, sqfree);
  uint64_t counter = 0;
  for (const auto& [g, mult] : sqfree) {
    // distinct-degree split of the squarefree g
    Poly rem = g;
    Poly h = Poly::x(p);
    int d = 0;
    while (rem.deg() > 0) {
      ++d;
      if (2 * d > rem.deg()) {
        result.emplace_back(monic(rem, p), mult);
        break;
      }
      h = frobenius_pow(h, 1, rem, p);
      Poly gd = gcd(sub(h, Poly::x(p), p), rem, p);
      if (gd.deg() > 0) {
        std::vector<Poly> irred;
        detail::equal_degree_rec(gd, d, p, key, counter, irred);
        for (Poly& q : irred) result.emplace_back(std::move(q), mult);
        rem = divmod(rem, gd, p).first;
        h = mod(h, rem, p);
      }
    }
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.c < b.first.c;
  });
  return result;
}

}  // namespace poly
}  // namespace qbrick
