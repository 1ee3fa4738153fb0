#pragma once

#include <cstdint>
#include <vector>

#include "qbrick/quiver.hpp"

namespace qbrick {

inline void require_path_algebra(const Quiver& q, const char* what) {
  if (!q.is_path_algebra())
    throw error(std::string(what) + " requires a relation-free path algebra");
}

inline void require_acyclic_path_algebra(const Quiver& q, const char* what) {
  require_path_algebra(q, what);
  if (!q.acyclic())
    throw error(std::string(what) + " requires an acyclic quiver");
}

/// Number of directed paths between all vertex pairs (trivial paths
/// included), by dynamic programming over the topological order.
inline std::vector<std::vector<int64_t>> path_counts(const Quiver& q) {
  require_acyclic_path_algebra(q, "path_counts");
  int n = q.num_vertices();
  std::vector<std::vector<int64_t>> c(n, std::vector<int64_t>(n, 0));
  const std::vector<int>& topo = q.topo_order();
  // paths(i,j) = delta_ij + sum over arrows i->k of paths(k,j);
  // process sources in reverse topological order.
  for (int t = n - 1; t >= 0; --t) {
    int i = topo[t];
    c[i][i] = 1;
    for (const Arrow& a : q.arrows)
      if (a.src == i)
        for (int j = 0; j < n; ++j) c[i][j] += c[a.dst][j];
  }
  return c;
}

/// Dimension vectors of the indecomposable projectives: entry j of the
/// i-th vector counts directed paths i -> j.
inline std::vector<DimVector> projective_dim_vectors(const Quiver& q) {
  require_acyclic_path_algebra(q, "projective_dim_vectors");
  auto counts = path_counts(q);
  std::vector<DimVector> out;
  for (int i = 0; i < q.num_vertices(); ++i) out.push_back(DimVector{counts[i]});
  return out;
}

/// iota: class of projectives -> dimension vectors (may be negative for
/// virtual classes).
inline std::vector<int64_t> iota(const Quiver& q, const ThetaVector& theta) {
  require_acyclic_path_algebra(q, "iota");
  if (theta.v.size() != static_cast<size_t>(q.num_vertices()))
    throw error("iota: theta size mismatch");
  auto projs = projective_dim_vectors(q);
  std::vector<int64_t> d(q.num_vertices(), 0);
  for (int i = 0; i < q.num_vertices(); ++i)
    for (int j = 0; j < q.num_vertices(); ++j)
      d[j] += theta.v[i] * projs[i].v[j];
  return d;
}

/// Exact inverse of iota, by forward substitution along the topological
/// order (the path-count matrix is unitriangular there).
inline ThetaVector iota_inverse(const Quiver& q, const DimVector& d) {
  require_acyclic_path_algebra(q, "iota_inverse");
  if (d.v.size() != static_cast<size_t>(q.num_vertices()))
    throw error("iota_inverse: dimension vector size mismatch");
  auto counts = path_counts(q);
  const std::vector<int>& topo = q.topo_order();
  ThetaVector theta;
  theta.v.assign(q.num_vertices(), 0);
  for (size_t t = 0; t < topo.size(); ++t) {
    int j = topo[t];
    int64_t val = d.v[j];
    for (size_t u = 0; u < t; ++u) {
      int i = topo[u];
      val -= theta.v[i] * counts[i][j];
    }
    theta.v[j] = val;  // counts[j][j] == 1
  }
  return theta;
}

/// Euler pairing <theta, d> = sum_i theta_i d_i (the bilinear extension
/// of <[P_i], dim S_j> = delta_ij).
inline int64_t euler_pairing(const Quiver& q, const ThetaVector& theta,
                             const DimVector& d) {
  if (theta.v.size() != d.v.size() ||
      theta.v.size() != static_cast<size_t>(q.num_vertices()))
    throw error("euler_pairing: size mismatch");
  int64_t s = 0;
  for (size_t i = 0; i < d.v.size(); ++i) s += theta.v[i] * d.v[i];
  return s;
}

inline int64_t euler_pairing(const Quiver& q, const ThetaVector& theta,
                             const std::vector<int64_t>& d) {
  DimVector dv{d};
  return euler_pairing(q, theta, dv);
}

/// Hereditary Euler form on dimension vectors:
/// <d, e> = sum_i d_i e_i - sum_{arrows a} d_{s(a)} e_{t(a)}.
/// Agrees with euler_pairing(iota_inverse(d), e) on acyclic path algebras.
inline int64_t euler_form_mod(const Quiver& q, const DimVector& d,
                              const DimVector& e) {
  if (d.v.size() != e.v.size() ||
      d.v.size() != static_cast<size_t>(q.num_vertices()))
    throw error("euler_form_mod: size mismatch");
  int64_t s = 0;
  for (size_t i = 0; i < d.v.size(); ++i) s += d.v[i] * e.v[i];
  for (const Arrow& a : q.arrows) s -= d.v[a.src] * e.v[a.dst];
  return s;
}

/// Euler quadratic form q(d) = <d, d>.
inline int64_t euler_quadratic(const Quiver& q, const DimVector& d) {
  return euler_form_mod(q, d, d);
}

}  // namespace qbrick
