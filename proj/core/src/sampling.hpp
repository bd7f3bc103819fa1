#pragma once

// Private helpers for deterministic, thread-count-independent sampling.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace oblique::detail {

inline constexpr std::size_t kSampleBlock = 1 << 14;

/// Runs body(i) for i in [0, jobs). body must write only to its own slot.
template <typename Body>
void parallel_for(std::size_t jobs, Body body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(hw, jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([=, &body] {
      for (std::size_t i = w; i < jobs; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Generator for one sample block; depends only on (seed, block).
inline std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace oblique::detail
