#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbrick/hom.hpp"
#include "qbrick/module.hpp"

namespace qbrick {

/// Indecomposable projective at a vertex, on the explicit path basis:
/// the basis of P_i at vertex j is the set of paths i -> j, and an arrow
/// acts by appending itself to the path.
inline RepModule projective_module(std::shared_ptr<const Quiver> q,
                                   FieldSpec field, int vertex) {
  require_acyclic_path_algebra(*q, "projective_module");
  if (vertex < 0 || vertex >= q->num_vertices())
    throw error("projective_module: vertex index out of range");

  // depth-first path enumeration, arrows in declaration order
  std::vector<std::vector<std::vector<int>>> paths_at(q->num_vertices());
  std::vector<int> cur;
  auto visit = [&](auto&& self, int at) -> void {
    paths_at[at].push_back(cur);
    for (int a = 0; a < q->num_arrows(); ++a)
      if (q->arrows[a].src == at) {
        cur.push_back(a);
        self(self, q->arrows[a].dst);
        cur.pop_back();
      }
  };
  visit(visit, vertex);

  std::vector<std::map<std::vector<int>, size_t>> index_at(q->num_vertices());
  DimVector d = q->zero_dim();
  for (int v = 0; v < q->num_vertices(); ++v) {
    for (size_t k = 0; k < paths_at[v].size(); ++k)
      index_at[v][paths_at[v][k]] = k;
    d.v[v] = static_cast<int64_t>(paths_at[v].size());
  }

  RepModule m = zero_filled_module(q, field, d);
  for (int a = 0; a < q->num_arrows(); ++a) {
    const Arrow& ar = q->arrows[a];
    for (size_t k = 0; k < paths_at[ar.src].size(); ++k) {
      std::vector<int> extended = paths_at[ar.src][k];
      extended.push_back(a);
      m.mats[a].at(index_at[ar.dst].at(extended), k) = 1;
    }
  }
  return m;
}

/// A point of the presentation space of theta: an explicit module map
/// f : P1 -> P0 where P0 collects the positive part of theta and P1 the
/// negative part (their supports are disjoint by construction).
struct Presentation {
  ThetaVector theta;
  RepModule p0, p1;
  std::vector<Mat> f;     // per vertex, (P0)_v x (P1)_v
  int64_t hom_space_dim = 0;
};

namespace detail {

inline RepModule projective_sum(std::shared_ptr<const Quiver> q, FieldSpec field,
                                const std::vector<int64_t>& copies) {
  RepModule acc = zero_filled_module(q, field, q->zero_dim());
  for (int i = 0; i < q->num_vertices(); ++i) {
    if (copies[i] <= 0) continue;
    RepModule pi = projective_module(q, field, i);
    for (int64_t c = 0; c < copies[i]; ++c) acc = direct_sum(acc, pi);
  }
  return acc;
}

}  // namespace detail

/// Sample f uniformly from the hom space of module maps P1 -> P0
/// (coefficients over the computed basis), so every sample is a valid
/// presentation.
inline Presentation sample_presentation(std::shared_ptr<const Quiver> q,
                                        FieldSpec field, const ThetaVector& theta,
                                        uint64_t seed) {
  require_acyclic_path_algebra(*q, "sample_presentation");
  if (theta.v.size() != static_cast<size_t>(q->num_vertices()))
    throw error("sample_presentation: theta size mismatch");
  std::vector<int64_t> pos(theta.v.size()), neg(theta.v.size());
  for (size_t i = 0; i < theta.v.size(); ++i) {
    pos[i] = std::max<int64_t>(theta.v[i], 0);
    neg[i] = std::max<int64_t>(-theta.v[i], 0);
  }
  Presentation pres;
  pres.theta = theta;
  pres.p0 = detail::projective_sum(q, field, pos);
  pres.p1 = detail::projective_sum(q, field, neg);
  HomSpace h = hom_space(pres.p1, pres.p0);
  pres.hom_space_dim = h.dim;
  pres.f = h.random_element(pres.p1, pres.p0, rng::derive(seed, 0xf0f));
  return pres;
}

inline bool is_injective(const Presentation& pres) {
  for (const Mat& fv : pres.f)
    if (fv.rank() != fv.cols()) return false;
  return true;
}

/// Vertex-wise quotient P0 / im f with the induced arrow action.
inline RepModule cokernel(const Presentation& pres) {
  const RepModule& p0 = pres.p0;
  const Quiver& q = *p0.quiver;
  uint64_t p = p0.field.p;
  int nv = q.num_vertices();
  std::vector<Mat> proj(nv), sect(nv);
  DimVector cdim = q.zero_dim();
  for (int v = 0; v < nv; ++v) {
    size_t n = static_cast<size_t>(p0.dim.v[v]);
    Mat im = pres.f[v].column_space();
    // complete im to a basis with standard vectors, greedily
    Mat basis = im;
    for (size_t j = 0; j < n && basis.cols() < n; ++j) {
      Mat e(n, 1, p);
      e.at(j, 0) = 1;
      Mat cand = Mat::hstack(basis, e);
      if (cand.rank() == basis.cols() + 1) basis = cand;
    }
    if (basis.cols() != n) throw error("cokernel: basis completion failed");
    auto inv = basis.inverse();
    if (!inv) throw error("cokernel: completed basis not invertible");
    size_t r = im.cols();
    cdim.v[v] = static_cast<int64_t>(n - r);
    proj[v] = inv->block(r, 0, n - r, n);
    sect[v] = basis.block(0, r, n, n - r);
  }
  RepModule c;
  c.quiver = p0.quiver;
  c.field = p0.field;
  c.dim = cdim;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    c.mats.push_back(proj[ar.dst] * p0.mats[a] * sect[ar.src]);
  }
  return c;
}

/// theta evaluated on a module: the Euler pairing with its dimension
/// vector.
inline int64_t theta_value(const Quiver& q, const ThetaVector& theta,
                           const RepModule& m) {
  return euler_pairing(q, theta, m.dim);
}

enum class FbarMode { automatic, exhaustive, fast_path };

struct FbarResult {
  bool member = false;
  std::string mode;  // "exhaustive" or "fast-path"
  std::string rule;  // which rule fired
  std::vector<int64_t> submodule_theta_values;  // exhaustive mode only
};

namespace detail {

/// All subspaces of F_p^d as column-basis matrices, enumerated through
/// reduced row-echelon representatives (canonical, duplicate-free).
inline std::vector<Mat> all_subspaces(size_t d, uint64_t p) {
  std::vector<Mat> out;
  for (size_t k = 0; k <= d; ++k) {
    // choose pivot columns
    std::vector<size_t> pivots(k);
    for (size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      // free positions: (row i, col c) with c > pivots[i], c not a pivot
      std::vector<std::pair<size_t, size_t>> free_pos;
      for (size_t i = 0; i < k; ++i)
        for (size_t c = pivots[i] + 1; c < d; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back(i, c);
      uint64_t total = 1;
      for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
      for (uint64_t code = 0; code < total; ++code) {
        Mat rref(k, d, p);
        for (size_t i = 0; i < k; ++i) rref.at(i, pivots[i]) = 1;
        uint64_t c = code;
        for (const auto& [ri, ci] : free_pos) {
          rref.at(ri, ci) = c % p;
          c /= p;
        }
        out.push_back(rref.transpose());  // columns span the subspace
      }
      // next pivot combination
      size_t i = k;
      while (i > 0) {
        --i;
        if (pivots[i] + (k - i) < d) {
          ++pivots[i];
          for (size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = k + 1;
          break;
        }
      }
      if (k == 0 || i == k + 1) break;
    }
  }
  return out;
}

inline bool contained_in(const Mat& vecs, const Mat& space) {
  if (vecs.cols() == 0) return true;
  return space.solve(vecs).has_value();
}

}  // namespace detail

/// Torsion-free-class membership oracle: every submodule L satisfies
/// theta(L) <= 0.  Exhaustive mode enumerates all arrow-stable subspace
/// tuples (total dim <= 8, p <= 3); the brick fast path applies when m
/// is a non-exceptional brick and theta is the matching projective
/// class of its dimension vector.
inline FbarResult in_fbar_theta(const RepModule& m, const ThetaVector& theta,
                                FbarMode mode = FbarMode::automatic) {
  const Quiver& q = *m.quiver;
  if (theta.v.size() != static_cast<size_t>(q.num_vertices()))
    throw error("in_fbar_theta: theta size mismatch");

  bool exhaustive_ok = m.total_dim() <= 8 && m.field.p <= 3;
  auto fast_path_eligible = [&]() -> bool {
    if (!q.is_path_algebra() || !q.acyclic()) return false;
    if (!is_brick(m)) return false;
    if (!(iota_inverse(q, m.dim) == theta)) return false;
    return ext1_dim(m, m) >= 1;
  };

  if (mode == FbarMode::automatic) {
    if (exhaustive_ok)
      mode = FbarMode::exhaustive;
    else if (fast_path_eligible())
      mode = FbarMode::fast_path;
    else
      throw error(
          "in_fbar_theta: oracle infeasible (exhaustive bounds are total dim "
          "<= 8 and p <= 3; brick fast path not eligible)");
  }

  FbarResult out;
  if (mode == FbarMode::fast_path) {
    if (!fast_path_eligible())
      throw error("in_fbar_theta: brick fast path not eligible");
    out.member = true;
    out.mode = "fast-path";
    out.rule = "non-exceptional brick with theta = iota^{-1}(dim): member";
    return out;
  }

  if (!exhaustive_ok)
    throw error("in_fbar_theta: oracle infeasible (total dim <= 8, p <= 3)");
  out.mode = "exhaustive";
  out.member = true;
  int nv = q.num_vertices();
  std::vector<std::vector<Mat>> spaces(nv);
  for (int v = 0; v < nv; ++v)
    spaces[v] = detail::all_subspaces(static_cast<size_t>(m.dim.v[v]), m.field.p);

  std::vector<size_t> pick(nv, 0);
  while (true) {
    // arrow stability of the tuple
    bool stable = true;
    for (int a = 0; a < q.num_arrows() && stable; ++a) {
      const Arrow& ar = q.arrows[a];
      Mat image = m.mats[a] * spaces[ar.src][pick[ar.src]];
      stable = detail::contained_in(image, spaces[ar.dst][pick[ar.dst]]);
    }
    if (stable) {
      int64_t val = 0;
      for (int v = 0; v < nv; ++v)
        val += theta.v[v] * static_cast<int64_t>(spaces[v][pick[v]].cols());
      out.submodule_theta_values.push_back(val);
      if (val > 0) out.member = false;
    }
    int v = 0;
    while (v < nv && ++pick[v] == spaces[v].size()) {
      pick[v] = 0;
      ++v;
    }
    if (v == nv) break;
  }
  out.rule = out.member ? "all submodule values <= 0"
                        : "found submodule with positive value";
  return out;
}

/// Search for l such that a generic injective f in the presentation
/// space of l*theta has cokernel Hom-orthogonal to m.
struct FeiSearchResult {
  bool found = false;
  int l = 0;
  int trial = -1;
  Presentation witness;
  RepModule coker;
  struct LStats {
    int l = 0;
    int injective = 0;
    int hom_zero = 0;
  };
  std::vector<LStats> stats;
  bool fbar_checked = false;
  bool fbar_member = false;
  bool fbar_assumed = false;  // oracle infeasible; hypothesis recorded as assumed
};

inline FeiSearchResult fei_generic_perp_search(std::shared_ptr<const Quiver> q,
                                               FieldSpec field,
                                               const ThetaVector& theta,
                                               const RepModule& m, int l_max,
                                               int trials, uint64_t seed) {
  require_acyclic_path_algebra(*q, "fei_generic_perp_search");
  if (trials < 1) throw error("fei_generic_perp_search: trials must be >= 1");
  if (l_max < 1) throw error("fei_generic_perp_search: l_max must be >= 1");
  FeiSearchResult out;
  try {
    FbarResult fb = in_fbar_theta(m, theta);
    out.fbar_checked = true;
    out.fbar_member = fb.member;
  } catch (const error&) {
    out.fbar_assumed = true;
  }
  for (int l = 1; l <= l_max; ++l) {
    FeiSearchResult::LStats st;
    st.l = l;
    for (int t = 0; t < trials; ++t) {
      Presentation pres =
          sample_presentation(q, field, l * theta, rng::derive(seed, l, t));
      if (!is_injective(pres)) continue;
      ++st.injective;
      RepModule c = cokernel(pres);
      if (hom_dim(c, m) == 0) {
        ++st.hom_zero;
        out.found = true;
        out.l = l;
        out.trial = t;
        out.witness = std::move(pres);
        out.coker = std::move(c);
        out.stats.push_back(st);
        return out;
      }
    }
    out.stats.push_back(st);
  }
  return out;
}

}  // namespace qbrick
