#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qbrick/hom.hpp"
#include "qbrick/module.hpp"
#include "qbrick/poly.hpp"

namespace qbrick {

/// Indecomposable decomposition with an explicit witness: a vertex-wise
/// invertible g with g_{t(a)}^{-1} phi_a g_{s(a)} block-diagonal, the
/// diagonal blocks being the listed `blocks` in order.  `summands`
/// groups the blocks up to (randomized) isomorphism.
struct Decomposition {
  std::vector<RepModule> blocks;
  std::vector<Mat> witness;
  struct Group {
    RepModule rep;
    int multiplicity = 1;
  };
  std::vector<Group> summands;
  int indec_trials = 0;  // consecutive non-splitting endos per leaf
  uint64_t seed = 0;
};

namespace detail {

struct SplitParts {
  std::vector<RepModule> parts;
  std::vector<Mat> basis;  // per-vertex g exhibiting the block form
};

/// Attempt to split m along one random endomorphism: factor its
/// characteristic polynomial and cut along coprime generalized kernels
/// (each is a submodule since polynomial evaluations of an endomorphism
/// are endomorphisms).  Returns nothing if the char poly is primary.
inline std::optional<SplitParts> try_split(const RepModule& m,
                                           const HomSpace& end, uint64_t key) {
  uint64_t p = m.field.p;
  const Quiver& q = *m.quiver;
  std::vector<Mat> phi = end.random_element(m, m, key);
  Poly cp = Poly::constant(1, p);
  for (const Mat& fv : phi) cp = poly::mul(cp, poly::charpoly(fv), p);
  auto factors = poly::factor(cp, p, rng::derive(key, 0xfac));
  if (factors.size() < 2) return std::nullopt;

  int nv = q.num_vertices();
  std::vector<std::vector<Mat>> kernels(factors.size());
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    kernels[fi].reserve(nv);
    for (int v = 0; v < nv; ++v) {
      Mat fv = poly::eval_mat(factors[fi].first, phi[v]).pow(factors[fi].second);
      kernels[fi].push_back(fv.kernel());
    }
  }

  SplitParts out;
  std::vector<Mat> ginv(nv);
  for (int v = 0; v < nv; ++v) {
    size_t n = static_cast<size_t>(m.dim.v[v]);
    Mat g(n, 0, p);
    for (size_t fi = 0; fi < factors.size(); ++fi)
      g = Mat::hstack(g, kernels[fi][v]);
    if (g.cols() != n)
      throw error("decompose: generalized kernels do not fill the space");
    auto inv = g.inverse();
    if (!inv) throw error("decompose: kernel basis not invertible");
    out.basis.push_back(g);
    ginv[v] = *inv;
  }

  for (size_t fi = 0; fi < factors.size(); ++fi) {
    RepModule part;
    part.quiver = m.quiver;
    part.field = m.field;
    part.dim = q.zero_dim();
    for (int v = 0; v < nv; ++v)
      part.dim.v[v] = static_cast<int64_t>(kernels[fi][v].cols());
    std::vector<size_t> off(nv, 0);
    for (int v = 0; v < nv; ++v)
      for (size_t fj = 0; fj < fi; ++fj) off[v] += kernels[fj][v].cols();
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[a];
      Mat conj = ginv[ar.dst] * m.mats[a] * out.basis[ar.src];
      part.mats.push_back(conj.block(off[ar.dst], off[ar.src],
                                     kernels[fi][ar.dst].cols(),
                                     kernels[fi][ar.src].cols()));
    }
    out.parts.push_back(std::move(part));
  }

  // the kernels are submodules, so off-diagonal blocks must vanish
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    std::vector<Mat> diag;
    for (const RepModule& part : out.parts) diag.push_back(part.mats[a]);
    Mat expect = Mat::block_diag(diag, p);
    if (!(ginv[ar.dst] * m.mats[a] * out.basis[ar.src] == expect))
      throw error("decompose: split is not arrow-stable");
  }
  return out;
}

inline void decompose_rec(const RepModule& m, uint64_t seed, int trials,
                          std::vector<RepModule>& blocks,
                          std::vector<Mat>& witness) {
  const Quiver& q = *m.quiver;
  witness.clear();
  if (m.total_dim() == 0) {
    for (int v = 0; v < q.num_vertices(); ++v)
      witness.push_back(Mat::identity(0, m.field.p));
    return;
  }
  HomSpace end = hom_space(m, m);
  std::optional<SplitParts> split;
  if (end.dim > 1) {
    for (int t = 0; t < trials && !split; ++t)
      split = try_split(m, end, rng::derive(seed, 0x41a, t));
  }
  if (!split) {
    // indecomposable (certified when End is one-dimensional, otherwise
    // after `trials` consecutive non-splitting endomorphisms)
    blocks.push_back(m);
    for (int v = 0; v < q.num_vertices(); ++v)
      witness.push_back(
          Mat::identity(static_cast<size_t>(m.dim.v[v]), m.field.p));
    return;
  }
  std::vector<std::vector<Mat>> sub_witnesses;
  std::vector<std::vector<RepModule>> sub_blocks;
  for (size_t i = 0; i < split->parts.size(); ++i) {
    std::vector<RepModule> bs;
    std::vector<Mat> ws;
    decompose_rec(split->parts[i], rng::derive(seed, 0x41b, i), trials, bs, ws);
    sub_blocks.push_back(std::move(bs));
    sub_witnesses.push_back(std::move(ws));
  }
  for (int v = 0; v < q.num_vertices(); ++v) {
    std::vector<Mat> per_part;
    for (const auto& ws : sub_witnesses) per_part.push_back(ws[v]);
    witness.push_back(split->basis[v] * Mat::block_diag(per_part, m.field.p));
  }
  for (auto& bs : sub_blocks)
    for (auto& b : bs) blocks.push_back(std::move(b));
}

}  // namespace detail

/// Exact conjugation check: witness is vertex-wise invertible and
/// g_t^{-1} phi_a g_s equals the block diagonal of the listed blocks.
inline bool verify_decomposition(const RepModule& m, const Decomposition& dec) {
  const Quiver& q = *m.quiver;
  DimVector total = q.zero_dim();
  for (const RepModule& b : dec.blocks) total = total + b.dim;
  if (!(total == m.dim)) return false;
  std::vector<Mat> ginv;
  for (int v = 0; v < q.num_vertices(); ++v) {
    auto inv = dec.witness[v].inverse();
    if (!inv) return false;
    ginv.push_back(*inv);
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    std::vector<Mat> diag;
    for (const RepModule& b : dec.blocks) diag.push_back(b.mats[a]);
    if (!(ginv[ar.dst] * m.mats[a] * dec.witness[ar.src] ==
          Mat::block_diag(diag, m.field.p)))
      return false;
  }
  return true;
}

/// Split into indecomposable summands by random Fitting/eigenspace
/// splitting.  Splits are always genuine (kernels of coprime polynomial
/// evaluations of an endomorphism); indecomposability of the leaves is
/// the one-sided randomized claim, with the trial budget recorded.
inline Decomposition decompose_indec(const RepModule& m, uint64_t seed,
                                     int trials = 24) {
  if (trials < 1) throw error("decompose_indec: trials must be >= 1");
  Decomposition dec;
  dec.indec_trials = trials;
  dec.seed = seed;
  detail::decompose_rec(m, seed, trials, dec.blocks, dec.witness);
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    bool grouped = false;
    for (auto& g : dec.summands) {
      if (g.rep.dim == dec.blocks[i].dim &&
          is_isomorphic(g.rep, dec.blocks[i], rng::derive(seed, 0x6e0, i))) {
        ++g.multiplicity;
        grouped = true;
        break;
      }
    }
    if (!grouped) dec.summands.push_back({dec.blocks[i], 1});
  }
  return dec;
}

/// Multiset of summand dimension vectors of a generic module of
/// dimension d, majority-voted over `samples` random modules.
struct CanonicalDecomposition {
  std::vector<DimVector> parts;  // sorted multiset
  int agreeing = 0;
  int samples = 0;
  bool unanimous = true;
  uint64_t p_used = 0;
  bool retried = false;
};

inline CanonicalDecomposition canonical_decomposition(
    std::shared_ptr<const Quiver> q, FieldSpec field, const DimVector& d,
    uint64_t seed, int samples = 7) {
  require_acyclic_path_algebra(*q, "canonical_decomposition");
  if (samples < 1) throw error("canonical_decomposition: samples must be >= 1");

  auto run = [&](FieldSpec f) {
    std::vector<std::vector<DimVector>> seen;
    std::vector<int> counts;
    for (int i = 0; i < samples; ++i) {
      RepModule mod = random_module(q, f, d, rng::derive(seed, 0xca0, i));
      Decomposition dec = decompose_indec(mod, rng::derive(seed, 0xca1, i));
      std::vector<DimVector> multiset;
      for (const RepModule& b : dec.blocks) multiset.push_back(b.dim);
      std::sort(multiset.begin(), multiset.end());
      bool found = false;
      for (size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == multiset) {
          ++counts[k];
          found = true;
          break;
        }
      if (!found) {
        seen.push_back(std::move(multiset));
        counts.push_back(1);
      }
    }
    size_t best = 0;
    for (size_t k = 1; k < seen.size(); ++k)
      if (counts[k] > counts[best] ||
          (counts[k] == counts[best] && seen[k] < seen[best]))
        best = k;
    CanonicalDecomposition out;
    out.parts = seen[best];
    out.agreeing = counts[best];
    out.samples = samples;
    out.unanimous = counts[best] == samples;
    out.p_used = f.p;
    return out;
  };

  CanonicalDecomposition out = run(field);
  if (!out.unanimous && field.p < fp::kMaxPrime) {
    // small primes can fail genericity; retry at the largest prime
    out = run(FieldSpec(fp::kMaxPrime));
    out.retried = true;
  }
  return out;
}

enum class SchurVerdict { real, tame, wild, probably_not_schur };

inline const char* to_string(SchurVerdict v) {
  switch (v) {
    case SchurVerdict::real: return "real";
    case SchurVerdict::tame: return "tame";
    case SchurVerdict::wild: return "wild";
    default: return "probably-not-schur";
  }
}

/// Trichotomy evidence for a dimension vector: sample until a brick is
/// hit, classify by the sign of the Euler quadratic form, and cross-check
/// the canonical decomposition of 2d (d+d for real/tame, 2d for wild).
struct SchurClassification {
  SchurVerdict verdict = SchurVerdict::probably_not_schur;
  int64_t q_value = 0;
  int brick_hit_trial = -1;  // -1: no brick found
  int trials = 0;
  bool has_double_check = false;
  CanonicalDecomposition double_check;
  bool crosscheck_ok = true;
};

inline SchurClassification classify_schur_root(std::shared_ptr<const Quiver> q,
                                               FieldSpec field, const DimVector& d,
                                               uint64_t seed, int trials = 40) {
  require_acyclic_path_algebra(*q, "classify_schur_root");
  if (trials < 1) throw error("classify_schur_root: trials must be >= 1");
  SchurClassification out;
  out.trials = trials;
  out.q_value = euler_quadratic(*q, d);
  for (int t = 0; t < trials; ++t) {
    RepModule m = random_module(q, field, d, rng::derive(seed, 0x5c0, t));
    if (is_brick(m)) {
      out.brick_hit_trial = t;
      break;
    }
  }
  if (out.brick_hit_trial < 0) {
    out.verdict = SchurVerdict::probably_not_schur;
    return out;
  }
  if (out.q_value == 1)
    out.verdict = SchurVerdict::real;
  else if (out.q_value == 0)
    out.verdict = SchurVerdict::tame;
  else if (out.q_value < 0)
    out.verdict = SchurVerdict::wild;
  else
    throw error("classify_schur_root: brick with q(d) > 1 is impossible");

  out.double_check =
      canonical_decomposition(q, field, 2 * d, rng::derive(seed, 0x5c1));
  out.has_double_check = true;
  std::vector<DimVector> expect;
  if (out.verdict == SchurVerdict::wild) {
    expect = {2 * d};
  } else {
    expect = {d, d};
    std::sort(expect.begin(), expect.end());
  }
  out.crosscheck_ok = out.double_check.parts == expect;
  return out;
}

}  // namespace qbrick
