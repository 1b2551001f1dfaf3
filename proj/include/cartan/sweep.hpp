#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cartan {

/// Execution policy for the sampling/quadrature sweeps.  Work is split into
/// a fixed number of shards with per-shard RNG seeds; partial results are
/// reduced serially in shard order, so the outcome is identical for the
/// serial reference path and the OpenMP path, at any thread count.
struct SweepPolicy {
  int shards = 64;
  bool parallel = true;
};

inline uint64_t shard_seed(uint64_t seed, int shard) {
  // splitmix64 over (seed, shard)
  uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (uint64_t(shard) + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Index range [begin, end) owned by a shard for `total` items.
inline std::pair<int64_t, int64_t> shard_range(int64_t total, int shards, int shard) {
  const int64_t base = total / shards;
  const int64_t extra = total % shards;
  const int64_t begin = shard * base + std::min<int64_t>(shard, extra);
  const int64_t len = base + (shard < extra ? 1 : 0);
  return {begin, begin + len};
}

/// Runs fn(shard) for each shard and returns the partials in shard order.
/// Exceptions thrown inside a shard are captured and rethrown (first shard
/// wins) after the loop joins; they must not escape an OpenMP region.
template <typename Partial, typename Fn>
std::vector<Partial> run_sharded(const SweepPolicy& policy, Fn&& fn) {
  const int shards = policy.shards > 0 ? policy.shards : 1;
  std::vector<Partial> partials(static_cast<size_t>(shards));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(shards));
  if (policy.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < shards; ++s) {
      try {
        partials[static_cast<size_t>(s)] = fn(s);
      } catch (...) {
        errors[static_cast<size_t>(s)] = std::current_exception();
      }
    }
  } else {
    // Serial reference path: identical shard schedule, no OpenMP.
    for (int s = 0; s < shards; ++s) {
      try {
        partials[static_cast<size_t>(s)] = fn(s);
      } catch (...) {
        errors[static_cast<size_t>(s)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

}  // namespace cartan
