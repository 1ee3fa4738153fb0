#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "qbrick/algebra.hpp"
#include "qbrick/mat.hpp"
#include "qbrick/quiver.hpp"
#include "qbrick/rng.hpp"

namespace qbrick {

/// A point of the representation space: one matrix per arrow over F_p.
/// Matrices have shape d_{t(a)} x d_{s(a)}; columns index the source
/// space, so a module map acts by left multiplication and paths compose
/// right to left in matrix order.
struct RepModule {
  std::shared_ptr<const Quiver> quiver;
  FieldSpec field;
  DimVector dim;
  std::vector<Mat> mats;  // one per arrow, in arrow declaration order

  int64_t total_dim() const { return dim.total(); }

  bool same_context(const RepModule& o) const {
    return field == o.field && quiver && o.quiver &&
           (quiver == o.quiver ||
            (quiver->vertices == o.quiver->vertices &&
             quiver->arrows.size() == o.quiver->arrows.size()));
  }

  bool operator==(const RepModule& o) const {
    return field == o.field && dim == o.dim && mats == o.mats;
  }

  void validate() const {
    if (!quiver) throw error("RepModule: missing quiver");
    if (dim.v.size() != static_cast<size_t>(quiver->num_vertices()))
      throw error("RepModule: dimension vector size mismatch");
    for (int64_t x : dim.v)
      if (x < 0) throw error("RepModule: negative dimension");
    if (mats.size() != static_cast<size_t>(quiver->num_arrows()))
      throw error("RepModule: matrix count mismatch");
    for (int a = 0; a < quiver->num_arrows(); ++a) {
      const Arrow& ar = quiver->arrows[a];
      if (mats[a].rows() != static_cast<size_t>(dim.v[ar.dst]) ||
          mats[a].cols() != static_cast<size_t>(dim.v[ar.src]) ||
          mats[a].p() != field.p)
        throw error("RepModule: matrix shape mismatch on arrow '" + ar.id + "'");
    }
  }
};

/// Zero-filled module of the given dimension vector.
inline RepModule zero_filled_module(std::shared_ptr<const Quiver> q,
                                    FieldSpec field, DimVector dim) {
  RepModule m;
  m.quiver = std::move(q);
  m.field = field;
  m.dim = std::move(dim);
  for (const Arrow& a : m.quiver->arrows)
    m.mats.emplace_back(static_cast<size_t>(m.dim.v[a.dst]),
                        static_cast<size_t>(m.dim.v[a.src]), field.p);
  m.validate();
  return m;
}

/// Simple module at a vertex.
inline RepModule simple_module(std::shared_ptr<const Quiver> q, FieldSpec field,
                               int vertex) {
  DimVector d = q->zero_dim();
  d.v.at(vertex) = 1;
  return zero_filled_module(std::move(q), field, std::move(d));
}

/// Uniform random point of rep(Q, d); entries are a pure function of
/// (seed, arrow index, entry index), so identical inputs reproduce the
/// module exactly.
inline RepModule random_module(std::shared_ptr<const Quiver> q, FieldSpec field,
                               const DimVector& d, uint64_t seed) {
  if (!q->is_path_algebra())
    throw error("random_module: sampling requires a path algebra");
  RepModule m = zero_filled_module(std::move(q), field, d);
  for (size_t a = 0; a < m.mats.size(); ++a) {
    Mat& mat = m.mats[a];
    uint64_t key = rng::derive(seed, 0x6d0d, a);
    for (size_t i = 0; i < mat.rows(); ++i)
      for (size_t j = 0; j < mat.cols(); ++j)
        mat.at(i, j) = rng::uniform(key, i * mat.cols() + j, field.p);
  }
  return m;
}

/// Matrix of a path acting on the module: arrows listed left to right,
/// matrices composed right to left.
inline Mat path_matrix(const RepModule& m, const std::vector<int>& arrows) {
  if (arrows.empty()) throw error("path_matrix: empty path");
  Mat r = m.mats[arrows.front()];
  for (size_t k = 1; k < arrows.size(); ++k) r = m.mats[arrows[k]] * r;
  return r;
}

/// True iff every relation evaluates to the zero matrix on m.
inline bool check_relations(const RepModule& m) {
  for (const Relation& rel : m.quiver->relations) {
    const RelationTerm& first = rel.terms.front();
    int src = m.quiver->arrows[first.arrows.front()].src;
    int dst = m.quiver->arrows[first.arrows.back()].dst;
    Mat acc(static_cast<size_t>(m.dim.v[dst]), static_cast<size_t>(m.dim.v[src]),
            m.field.p);
    for (const RelationTerm& t : rel.terms) {
      uint64_t c = fp::reduce_int(t.coeff, m.field.p);
      if (!c) continue;
      acc = acc + path_matrix(m, t.arrows).scaled(c);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

inline RepModule direct_sum(const RepModule& a, const RepModule& b) {
  if (!a.same_context(b)) throw error("direct_sum: quiver or field mismatch");
  RepModule r;
  r.quiver = a.quiver;
  r.field = a.field;
  r.dim = a.dim + b.dim;
  for (size_t k = 0; k < a.mats.size(); ++k)
    r.mats.push_back(Mat::block_diag({a.mats[k], b.mats[k]}, a.field.p));
  return r;
}

inline RepModule direct_sum(const std::vector<RepModule>& parts) {
  if (parts.empty()) throw error("direct_sum: empty list");
  RepModule r = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) r = direct_sum(r, parts[i]);
  return r;
}

/// Random invertible vertex-wise change of basis g, applied as
/// phi_a -> g_{t(a)} phi_a g_{s(a)}^{-1}; returns a point of the same
/// orbit.  Resamples each g_i until invertible.
inline RepModule random_basis_change(const RepModule& m, uint64_t seed,
                                     std::vector<Mat>* witness = nullptr) {
  std::vector<Mat> g, ginv;
  for (int v = 0; v < m.quiver->num_vertices(); ++v) {
    size_t n = static_cast<size_t>(m.dim.v[v]);
    for (uint64_t attempt = 0;; ++attempt) {
      if (attempt > 256)
        throw error("random_basis_change: could not sample invertible matrix");
      Mat cand(n, n, m.field.p);
      uint64_t key = rng::derive(seed, 0xbc, static_cast<uint64_t>(v), attempt);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          cand.at(i, j) = rng::uniform(key, i * n + j, m.field.p);
      if (auto inv = cand.inverse()) {
        g.push_back(cand);
        ginv.push_back(*inv);
        break;
      }
    }
  }
  RepModule r = m;
  for (size_t a = 0; a < m.mats.size(); ++a) {
    const Arrow& ar = m.quiver->arrows[a];
    r.mats[a] = g[ar.dst] * m.mats[a] * ginv[ar.src];
  }
  if (witness) *witness = std::move(g);
  return r;
}

}  // namespace qbrick
