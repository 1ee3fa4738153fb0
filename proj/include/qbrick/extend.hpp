#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbrick/decompose.hpp"
#include "qbrick/hom.hpp"
#include "qbrick/module.hpp"

namespace qbrick {

/// Certificate for a successful semibrick extension: the found brick,
/// the multiple l of the designated member's dimension vector, the seed
/// and trial that produced it, and every Hom check that was verified.
struct ExtensionCertificate {
  RepModule found;
  int l = 0;
  uint64_t seed = 0;
  int trial = -1;
  int64_t end_dim = 0;                  // End(found), must be 1
  std::vector<int64_t> hom_to_members;  // hom(found, member_i), all 0
  std::vector<int64_t> hom_from_members;  // hom(member_i, found), all 0
};

struct ExtendResult {
  bool found = false;
  ExtensionCertificate cert;
  bool member_exceptional = false;  // extension theorem hypothesis unmet
  SchurVerdict member_class = SchurVerdict::probably_not_schur;
  int64_t member_q = 0;
  struct LStats {
    int l = 0;
    int trials = 0;
    int bricks = 0;           // brick candidates seen
    int orthogonality_fail = 0;  // bricks rejected by a Hom condition
  };
  std::vector<LStats> stats;
  int l_max = 0;
  int trials = 0;
};

/// Re-verify an extension certificate from scratch against a semibrick:
/// brick condition, both Hom directions per member, dimension multiple.
inline bool verify_certificate(const Semibrick& s,
                               const ExtensionCertificate& cert, int member) {
  const RepModule& b = s.members.at(member);
  if (!(cert.found.dim == cert.l * b.dim)) return false;
  if (hom_dim(cert.found, cert.found) != 1) return false;
  for (const RepModule& x : s.members) {
    if (hom_dim(cert.found, x) != 0) return false;
    if (hom_dim(x, cert.found) != 0) return false;
  }
  return true;
}

/// Search for a brick B' with dim B' = l * dim B that extends the
/// semibrick: Hom(B', X) = Hom(X, B') = 0 for every member X.  Scans
/// l = 1..l_max, `trials` random modules each; first success (smallest
/// l, then trial) wins, so results are deterministic in the seed.
inline ExtendResult extend_semibrick(const Semibrick& s, int member, int l_max,
                                     int trials, uint64_t seed) {
  if (member < 0 || member >= static_cast<int>(s.members.size()))
    throw error("extend_semibrick: invalid member index");
  if (l_max < 1 || trials < 1)
    throw error("extend_semibrick: l_max and trials must be >= 1");
  SemibrickCheck chk = check_semibrick(s.members);
  if (!chk.ok) throw error("extend_semibrick: input is not a semibrick");

  const RepModule& b = s.members[member];
  auto q = b.quiver;
  require_acyclic_path_algebra(*q, "extend_semibrick");
  FieldSpec field = b.field;

  ExtendResult out;
  out.l_max = l_max;
  out.trials = trials;
  out.member_q = euler_quadratic(*q, b.dim);
  out.member_exceptional = ext1_dim(b, b) == 0;
  // b is a brick, so its dimension vector is a Schur root and the sign
  // of q classifies it (q = 1 - dim Ext^1(b,b) <= 1)
  out.member_class = out.member_q == 1   ? SchurVerdict::real
                     : out.member_q == 0 ? SchurVerdict::tame
                                         : SchurVerdict::wild;

  for (int l = 1; l <= l_max; ++l) {
    ExtendResult::LStats st;
    st.l = l;
    st.trials = trials;
    DimVector dl = l * b.dim;
    for (int t = 0; t < trials; ++t) {
      RepModule x = random_module(q, field, dl, rng::derive(seed, l, t));
      int64_t end = hom_dim(x, x);
      if (end != 1) continue;
      ++st.bricks;
      std::vector<int64_t> to(s.members.size()), from(s.members.size());
      bool ok = true;
      for (size_t i = 0; i < s.members.size(); ++i) {
        to[i] = hom_dim(x, s.members[i]);
        from[i] = hom_dim(s.members[i], x);
        if (to[i] != 0 || from[i] != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        ++st.orthogonality_fail;
        continue;
      }
      out.found = true;
      out.cert.found = std::move(x);
      out.cert.l = l;
      out.cert.seed = seed;
      out.cert.trial = t;
      out.cert.end_dim = end;
      out.cert.hom_to_members = std::move(to);
      out.cert.hom_from_members = std::move(from);
      out.stats.push_back(st);
      if (!verify_certificate(s, out.cert, member))
        throw error("extend_semibrick: certificate failed re-verification");
      return out;
    }
    out.stats.push_back(st);
  }
  return out;
}

struct GrowResult {
  Semibrick semibrick;
  bool reached_target = false;
  std::vector<ExtensionCertificate> steps;
};

/// Iterate the extension engine, always extending against the full
/// current set, until the semibrick reaches target_size or the budget
/// is exhausted (then the largest semibrick found is returned, flagged
/// partial).
inline GrowResult grow_semibrick(const Semibrick& s, int member, int target_size,
                                 int l_max, int trials, uint64_t seed) {
  if (target_size < 0) throw error("grow_semibrick: negative target");
  SemibrickCheck chk = check_semibrick(s.members);
  if (!chk.ok) throw error("grow_semibrick: input is not a semibrick");
  GrowResult out;
  out.semibrick = chk.semibrick;
  int round = 0;
  while (static_cast<int>(out.semibrick.size()) < target_size) {
    ExtendResult step = extend_semibrick(out.semibrick, member, l_max, trials,
                                         rng::derive(seed, 0x960, round++));
    if (!step.found) {
      out.reached_target = false;
      return out;
    }
    out.steps.push_back(step.cert);
    std::vector<RepModule> members = out.semibrick.members;
    members.push_back(step.cert.found);
    SemibrickCheck next = check_semibrick(members);
    if (!next.ok) throw error("grow_semibrick: extension failed verification");
    out.semibrick = next.semibrick;
  }
  out.reached_target = true;
  return out;
}

/// Probe report for (non-)maximality of a semibrick over a pool of
/// dimension vectors.
struct ProbeReport {
  struct PoolEntry {
    DimVector dim;
    std::vector<int> hit_trials;  // trials that produced an extension
    RepModule witness;            // first found extension, if any
    bool found = false;
  };
  std::vector<PoolEntry> pool;
  std::vector<bool> member_open;
  bool extension_found = false;
  bool violation_suspected = false;
  std::string verdict;
};

/// Sample candidate bricks from each pool dimension and test adjunction
/// to s.  If nothing extends while some member is a non-open brick, the
/// openness theorem says this cannot persist, so the report flags
/// THEOREM-VIOLATION-SUSPECTED (insufficient budget or a bug).
inline ProbeReport maximality_probe(const Semibrick& s,
                                    const std::vector<DimVector>& dim_pool,
                                    int trials, uint64_t seed) {
  if (dim_pool.empty()) throw error("maximality_probe: empty dimension pool");
  if (trials < 1) throw error("maximality_probe: trials must be >= 1");
  SemibrickCheck chk = check_semibrick(s.members);
  if (!chk.ok) throw error("maximality_probe: input is not a semibrick");
  if (s.members.empty()) throw error("maximality_probe: empty semibrick");
  auto q = s.members[0].quiver;
  require_acyclic_path_algebra(*q, "maximality_probe");
  FieldSpec field = s.members[0].field;

  ProbeReport out;
  for (size_t di = 0; di < dim_pool.size(); ++di) {
    ProbeReport::PoolEntry entry;
    entry.dim = dim_pool[di];
    for (int t = 0; t < trials; ++t) {
      RepModule x = random_module(q, field, entry.dim, rng::derive(seed, di, t));
      if (hom_dim(x, x) != 1) continue;
      bool ok = true;
      for (const RepModule& memb : s.members)
        if (hom_dim(x, memb) != 0 || hom_dim(memb, x) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      entry.hit_trials.push_back(t);
      if (!entry.found) {
        entry.found = true;
        entry.witness = x;
      }
      out.extension_found = true;
    }
    out.pool.push_back(std::move(entry));
  }
  for (const RepModule& memb : s.members)
    out.member_open.push_back(is_open_brick(memb));

  bool all_open = true;
  for (bool o : out.member_open) all_open = all_open && o;
  if (out.extension_found) {
    out.verdict = "not maximal: extension found";
  } else if (all_open) {
    out.verdict = "maximal within budget, consistent with all-members-open";
  } else {
    out.violation_suspected = true;
    out.verdict = "THEOREM-VIOLATION-SUSPECTED";
  }
  return out;
}

}  // namespace qbrick
