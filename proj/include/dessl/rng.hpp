#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace dessl {

// Every random draw in the library comes from a stream derived from one
// 64-bit run seed.  Streams are keyed by (seed, purpose, index) through the
// splitmix64 finalizer, so masks, batches, noise and perturbations are
// independently reproducible and re-running any subset of work gives the
// same draws.
enum class Purpose : std::uint64_t {
  kInit = 1,
  kGenerator = 2,
  kMask = 3,
  kLabelNoise = 4,
  kPerturb = 5,
  kValidationSplit = 6,
  kLabelledBatch = 7,
  kUnlabelledBatch = 8,
  kMcTrial = 9,
  kMcMoments = 10,
  kMaskCounts = 11,
  kThetaDraw = 12,
  kRademacherEps = 13,
  kHGap = 14,
  kSplit = 15,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// derive(seed, purpose, index) = splitmix64(splitmix64(splitmix64(seed) ^ purpose) ^ index)
constexpr std::uint64_t derive_seed(std::uint64_t seed, Purpose purpose, std::uint64_t index = 0) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(purpose));
  return splitmix64(s ^ index);
}

// mt19937_64 engine (sequence pinned by the standard) with hand-rolled
// distribution transforms, so draws are bit-identical across toolchains.
class RngStream {
 public:
  explicit RngStream(std::uint64_t stream_seed) : engine_(stream_seed) {}
  RngStream(std::uint64_t seed, Purpose purpose, std::uint64_t index = 0)
      : engine_(derive_seed(seed, purpose, index)) {}

  std::uint64_t next_u64() { return engine_(); }

  // in [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; two uniform draws per normal, second branch discarded.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  // unbiased integer in [0, n) by rejection
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dessl
