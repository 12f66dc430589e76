#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "uncond/family.hpp"
#include "uncond/seqspace.hpp"

namespace uncond {

/// Largest family size accepted by exhaustive 2^n enumeration.
inline constexpr std::size_t kDefaultMaxExhaustive = 24;

/// Gray indices per enumeration chunk. Chunking is fixed so results do not
/// depend on the thread count.
inline constexpr unsigned kChunkBits = 14;

/// Relative tolerance under which two norms count as tied. Ties keep the
/// earlier Gray index, so exact symmetries (s and -s for sign sums) resolve
/// deterministically despite rounding in the running sum.
inline constexpr double kTieEps = 1e-12;

/// True when `value` beats `best` by more than the tie tolerance.
constexpr bool beats(double value, double best) noexcept { return value > best + kTieEps * best; }

struct EnumerationOptions {
  std::size_t max_exhaustive = kDefaultMaxExhaustive;
  unsigned threads = 1;
};

/// What a Gray-code walk accumulates: subset sums (bit = member) or signed
/// sums (bit = sign -1).
enum class SumKind { Subset, Sign };

struct GrayMax {
  double value = 0.0;
  std::uint64_t mask = 0;
  /// Position in Gray order where the maximum was first attained.
  std::uint64_t gray_index = 0;
};

/// Maximum of ||sum||_q over all 2^n masks, walking Gray order with one
/// vector update per step. Ties resolve to the smallest Gray index.
/// No size check; callers enforce their caps.
GrayMax gray_max_norm(const Family& fam, const Exponent& q, SumKind kind, unsigned threads = 1);

/// Gray code of index i.
constexpr std::uint64_t gray_code(std::uint64_t i) noexcept { return i ^ (i >> 1); }

/// splitmix64 finalizer applied to (seed, stream); gives independent
/// per-restart seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Runs body(i) for i in [0, count) on up to `threads` workers. body must
/// write only to slot i of caller-owned storage.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
}

}  // namespace uncond
