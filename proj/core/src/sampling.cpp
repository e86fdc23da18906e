#include "ral/sampling.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace ral {

RandomStream::RandomStream(RunSeed seed) noexcept {
  // Master and trial pass through separate mixer rounds before combining, so
  // nearby (master, trial) pairs land on unrelated states.
  std::uint64_t x = mix64(seed.master + 0x9e3779b97f4a7c15ULL) ^
                    mix64(seed.trial ^ 0xd1b54a32d192ed03ULL);
  for (auto& word : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    word = mix64(x);
  }
  // All-zero state is the one fixed point of xoshiro.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RandomStream::next_u64() noexcept {
  const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double RandomStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

namespace {

// One accepted polar pair (u, v) scaled to two independent standard normals.
template <typename Stream>
inline void polar_pair(Stream& next_uniform, double& first, double& second) noexcept {
  double u, v, s;
  do {
    u = 2.0 * next_uniform() - 1.0;
    v = 2.0 * next_uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  first = u * factor;
  second = v * factor;
}

}  // namespace

double RandomStream::gaussian() noexcept {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  auto next = [this] { return uniform(); };
  double first, second;
  polar_pair(next, first, second);
  spare_ = second;
  return first;
}

void RandomStream::fill_gaussian(std::span<double> out) noexcept {
  std::size_t k = 0;
  if (spare_ && k < out.size()) {
    out[k++] = *spare_;
    spare_.reset();
  }
  auto next = [this] { return uniform(); };
  for (; k + 1 < out.size(); k += 2) polar_pair(next, out[k], out[k + 1]);
  if (k < out.size()) out[k] = gaussian();
}

double RandomStream::exponential() noexcept { return -std::log1p(-uniform()); }

double RandomStream::draw(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::Gaussian: return gaussian();
    case DistributionKind::Exponential: return exponential();
    case DistributionKind::Uniform: return uniform();
  }
  return 0.0;
}

void RandomStream::fill(DistributionKind kind, std::span<double> out) noexcept {
  switch (kind) {
    case DistributionKind::Gaussian:
      fill_gaussian(out);
      break;
    case DistributionKind::Exponential:
      for (double& x : out) x = exponential();
      break;
    case DistributionKind::Uniform:
      for (double& x : out) x = uniform();
      break;
  }
}

RandomStream derive_stream(RunSeed seed) noexcept { return RandomStream(seed); }

CostMatrix gen_matrix(std::size_t n, DistributionKind dist, RunSeed seed) {
  if (n == 0) throw InvalidSize("gen_matrix requires n >= 1");
  std::vector<double> entries(n * n);
  auto stream = derive_stream(seed);
  stream.fill(dist, entries);
  return CostMatrix(n, std::move(entries), dist);
}

}  // namespace ral
