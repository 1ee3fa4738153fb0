#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbrick/module.hpp"

namespace qbrick {

namespace detail {

/// Matrix of the intertwiner map
///   Phi : (+)_v Hom(K^{d_v}, K^{c_v}) -> (+)_a Hom(K^{d_{s(a)}}, K^{c_{t(a)}})
///   f |-> (f_{t(a)} phi^M_a - phi^N_a f_{s(a)})_a
/// for modules M (dims d) and N (dims c).  Hom(M, N) is its kernel;
/// Ext^1(M, N) its cokernel when the algebra is hereditary.
inline Mat intertwiner_matrix(const RepModule& m, const RepModule& n) {
  if (!m.same_context(n)) throw error("hom: quiver or field mismatch");
  const Quiver& q = *m.quiver;
  uint64_t p = m.field.p;
  std::vector<size_t> voff(q.num_vertices() + 1, 0);
  for (int v = 0; v < q.num_vertices(); ++v)
    voff[v + 1] = voff[v] + static_cast<size_t>(m.dim.v[v] * n.dim.v[v]);
  size_t rows = 0;
  for (const Arrow& a : q.arrows)
    rows += static_cast<size_t>(m.dim.v[a.src] * n.dim.v[a.dst]);

  Mat phi(rows, voff.back(), p);
  size_t row0 = 0;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    size_t ds = static_cast<size_t>(m.dim.v[a.src]);
    size_t dt = static_cast<size_t>(m.dim.v[a.dst]);
    size_t cs = static_cast<size_t>(n.dim.v[a.src]);
    size_t ct = static_cast<size_t>(n.dim.v[a.dst]);
    const Mat& phim = m.mats[ai];  // dt x ds
    const Mat& phin = n.mats[ai];  // ct x cs
    // equation entry (r, c) with r < ct, c < ds:
    //   sum_k f_t[r,k] phim[k,c] - sum_k phin[r,k] f_s[k,c] = 0
    for (size_t r = 0; r < ct; ++r)
      for (size_t c = 0; c < ds; ++c) {
        size_t row = row0 + r * ds + c;
        for (size_t k = 0; k < dt; ++k) {
          uint64_t v = phim.at(k, c);
          if (v) {
            size_t col = voff[a.dst] + r * dt + k;  // f_t[r,k]
            phi.at(row, col) = fp::add(phi.at(row, col), v, p);
          }
        }
        for (size_t k = 0; k < cs; ++k) {
          uint64_t v = phin.at(r, k);
          if (v) {
            size_t col = voff[a.src] + k * ds + c;  // f_s[k,c]
            phi.at(row, col) = fp::sub(phi.at(row, col), v, p);
          }
        }
      }
    row0 += ct * ds;
  }
  return phi;
}

inline std::vector<Mat> unflatten_hom(const RepModule& m, const RepModule& n,
                                      const Mat& kernel, size_t col) {
  std::vector<Mat> f;
  size_t off = 0;
  for (int v = 0; v < m.quiver->num_vertices(); ++v) {
    size_t d = static_cast<size_t>(m.dim.v[v]);
    size_t c = static_cast<size_t>(n.dim.v[v]);
    Mat fv(c, d, m.field.p);
    for (size_t r = 0; r < c; ++r)
      for (size_t j = 0; j < d; ++j) fv.at(r, j) = kernel.at(off + r * d + j, col);
    off += c * d;
    f.push_back(std::move(fv));
  }
  return f;
}

}  // namespace detail

/// The space of module homomorphisms M -> N: exact dimension and a
/// basis of vertex-indexed matrix tuples.
struct HomSpace {
  int64_t dim = 0;
  std::vector<std::vector<Mat>> basis;  // basis[k][v] : M_v -> N_v

  /// Random F_p-combination of the basis, keyed deterministically.
  std::vector<Mat> random_element(const RepModule& m, const RepModule& n,
                                  uint64_t key) const {
    std::vector<Mat> f;
    uint64_t p = m.field.p;
    for (int v = 0; v < m.quiver->num_vertices(); ++v)
      f.emplace_back(static_cast<size_t>(n.dim.v[v]),
                     static_cast<size_t>(m.dim.v[v]), p);
    for (size_t k = 0; k < basis.size(); ++k) {
      uint64_t c = rng::uniform(key, k, p);
      if (!c) continue;
      for (size_t v = 0; v < f.size(); ++v) f[v] = f[v] + basis[k][v].scaled(c);
    }
    return f;
  }
};

inline HomSpace hom_space(const RepModule& m, const RepModule& n) {
  Mat phi = detail::intertwiner_matrix(m, n);
  Mat ker = phi.kernel();
  HomSpace h;
  h.dim = static_cast<int64_t>(ker.cols());
  for (size_t c = 0; c < ker.cols(); ++c)
    h.basis.push_back(detail::unflatten_hom(m, n, ker, c));
  return h;
}

inline int64_t hom_dim(const RepModule& m, const RepModule& n) {
  Mat phi = detail::intertwiner_matrix(m, n);
  return static_cast<int64_t>(phi.cols() - phi.rank());
}

/// dim Ext^1(M, N) as the cokernel of the intertwiner map; valid for
/// relation-free acyclic path algebras (the hereditary case).
inline int64_t ext1_dim(const RepModule& m, const RepModule& n) {
  require_acyclic_path_algebra(*m.quiver, "ext1_dim (Ext^1)");
  Mat phi = detail::intertwiner_matrix(m, n);
  return static_cast<int64_t>(phi.rows() - phi.rank());
}

inline bool is_brick(const RepModule& m) { return hom_dim(m, m) == 1; }

/// A verified semibrick: pairwise Hom-orthogonal bricks, with the full
/// matrix of pairwise hom dimensions as certificate.
struct Semibrick {
  std::vector<RepModule> members;
  std::vector<std::vector<int64_t>> certificate;  // certificate[i][j] = hom(i -> j)

  size_t size() const { return members.size(); }
};

struct SemibrickCheck {
  bool ok = false;
  Semibrick semibrick;  // valid iff ok
  // failure witness
  enum class Failure { none, not_brick, hom_nonzero } failure = Failure::none;
  int i = -1, j = -1;
  int64_t witness_dim = 0;
};

/// Verify the semibrick conditions; on failure reports the first
/// violating member or ordered pair together with the hom dimension.
inline SemibrickCheck check_semibrick(const std::vector<RepModule>& members) {
  SemibrickCheck r;
  size_t n = members.size();
  r.semibrick.members = members;
  r.semibrick.certificate.assign(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int64_t h = hom_dim(members[i], members[j]);
      r.semibrick.certificate[i][j] = h;
      if (i == j && h != 1) {
        r.failure = SemibrickCheck::Failure::not_brick;
        r.i = static_cast<int>(i);
        r.j = static_cast<int>(i);
        r.witness_dim = h;
        return r;
      }
      if (i != j && h != 0) {
        r.failure = SemibrickCheck::Failure::hom_nonzero;
        r.i = static_cast<int>(i);
        r.j = static_cast<int>(j);
        r.witness_dim = h;
        return r;
      }
    }
  r.ok = true;
  return r;
}

/// Randomized isomorphism test.  "true" is certified by an explicit
/// invertible intertwiner; "false" is one-sided (a missed isomorphism
/// has probability <= (total_dim/p)^k on k random Hom-combinations).
inline bool is_isomorphic(const RepModule& m, const RepModule& n,
                          uint64_t seed = 0, int k = 8) {
  if (!m.same_context(n)) throw error("is_isomorphic: quiver or field mismatch");
  if (m.dim != n.dim) return false;
  if (m.total_dim() == 0) return true;
  HomSpace h = hom_space(m, n);
  if (h.dim == 0) return false;
  for (int t = 0; t < k; ++t) {
    std::vector<Mat> f = h.random_element(m, n, rng::derive(seed, 0x150, t));
    bool inv = true;
    for (const Mat& fv : f)
      if (!fv.is_invertible()) {
        inv = false;
        break;
      }
    if (inv) return true;
  }
  return false;
}

/// Open bricks over a path algebra are exactly the bricks without
/// self-extensions (Voigt).
inline bool is_open_brick(const RepModule& b) {
  require_acyclic_path_algebra(*b.quiver, "open-brick detection");
  if (!is_brick(b)) throw error("is_open_brick: module is not a brick");
  return ext1_dim(b, b) == 0;
}

/// dim GL(d) - dim End(M) = dim of the orbit of M.
inline int64_t orbit_dim(const RepModule& m) {
  int64_t gl = 0;
  for (int64_t x : m.dim.v) gl += x * x;
  return gl - hom_dim(m, m);
}

struct GenericHomStats {
  int64_t min_dim = 0;
  int attained = 0;
  int samples = 0;
  double fraction() const { return samples ? double(attained) / samples : 0.0; }
};

/// Minimum of hom_dim over sampled pairs of random modules, with the
/// fraction of samples attaining it (the open-dense locus evidence).
inline GenericHomStats generic_hom_dim(std::shared_ptr<const Quiver> q,
                                       FieldSpec field, const DimVector& d,
                                       const DimVector& e, int samples,
                                       uint64_t seed) {
  require_path_algebra(*q, "generic_hom_dim");
  if (samples < 1) throw error("generic_hom_dim: samples must be >= 1");
  GenericHomStats st;
  st.samples = samples;
  for (int i = 0; i < samples; ++i) {
    RepModule m = random_module(q, field, d, rng::derive(seed, 0xd1, i));
    RepModule n = random_module(q, field, e, rng::derive(seed, 0xd2, i));
    int64_t h = hom_dim(m, n);
    if (i == 0 || h < st.min_dim) {
      st.min_dim = h;
      st.attained = 1;
    } else if (h == st.min_dim) {
      ++st.attained;
    }
  }
  return st;
}

}  // namespace qbrick
