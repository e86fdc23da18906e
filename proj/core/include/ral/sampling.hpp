#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "ral/core.hpp"

namespace ral {

/// Identifies one reproducible random stream.
struct RunSeed {
  std::uint64_t master = 0;
  std::uint64_t trial = 0;

  friend bool operator==(const RunSeed&, const RunSeed&) = default;
};

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ stream with variate transforms on top. Period 2^256 - 1.
/// One stream per trial; not safe to share between threads.
class RandomStream {
 public:
  explicit RandomStream(RunSeed seed) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard normal via the Marsaglia polar method; caches the spare variate.
  double gaussian() noexcept;
  /// Exp(1) via -log(1 - U).
  double exponential() noexcept;
  double draw(DistributionKind kind) noexcept;

  /// Fills `out` with i.i.d. draws from `kind`, in order.
  void fill(DistributionKind kind, std::span<double> out) noexcept;

 private:
  void fill_gaussian(std::span<double> out) noexcept;

  std::array<std::uint64_t, 4> s_;
  std::optional<double> spare_;
};

/// Deterministic stream for (master, trial).
RandomStream derive_stream(RunSeed seed) noexcept;

/// n x n i.i.d. matrix filled row-major from derive_stream(seed).
/// Throws InvalidSize for n == 0.
CostMatrix gen_matrix(std::size_t n, DistributionKind dist, RunSeed seed);

}  // namespace ral
