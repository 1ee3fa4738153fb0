#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qbrick/quiver.hpp"
#include "qbrick/rng.hpp"

namespace qbrick {

/// Random acyclic quiver with up to max_vertices vertices; arrows only
/// go forward in declaration order, multi-arrows allowed.
inline std::shared_ptr<const Quiver> random_acyclic_quiver(uint64_t seed,
                                                           int max_vertices = 5) {
  uint64_t key = rng::derive(seed, 0x5a3);
  int n = 1 + static_cast<int>(rng::uniform(key, 0, max_vertices));
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i + 1));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  if (n > 1) {
    int na = static_cast<int>(rng::uniform(key, 1, 2 * n + 1));
    for (int a = 0; a < na; ++a) {
      int i = static_cast<int>(rng::uniform(key, 2 + 2 * a, n - 1));
      int j = i + 1 +
              static_cast<int>(rng::uniform(key, 3 + 2 * a, n - 1 - i));
      arrows.emplace_back("a" + std::to_string(a), verts[i], verts[j]);
    }
  }
  return std::make_shared<Quiver>(Quiver::build(verts, arrows));
}

/// Random dimension vector with entries in [0, max_entry], resampled so
/// it is not identically zero.
inline DimVector random_dim_vector(const Quiver& q, uint64_t seed,
                                   int64_t max_entry = 4) {
  DimVector d = q.zero_dim();
  uint64_t key = rng::derive(seed, 0xd1e);
  for (uint64_t attempt = 0;; ++attempt) {
    for (size_t i = 0; i < d.v.size(); ++i)
      d.v[i] = static_cast<int64_t>(
          rng::uniform(key, attempt * d.v.size() + i, max_entry + 1));
    if (!d.is_zero()) return d;
  }
}

}  // namespace qbrick
