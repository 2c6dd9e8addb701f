#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bstlab {

// Sweep kernels run through this wrapper so every parallel loop has a serial
// twin with identical iteration semantics. Reductions are done by the caller
// over per-index results, so thread count never changes the outcome.
template <class F>
void par_for(std::int64_t n, bool parallel, F&& body) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// splitmix64: deterministic seeding and per-cell streams for sweeps.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound) by rejection
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
  double unit() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace bstlab
