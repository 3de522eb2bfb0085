#pragma once

#include <cstdint>
#include <random>

namespace f2p {

/// Seedable generator used by every randomized routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Distributions are implemented here rather than taken from
/// <random> so that results do not depend on the standard library vendor.
/// Independent streams are derived from (seed, stream) with SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }
  bool bernoulli(double p) { return uniform() < p; }
  /// Number of trials up to and including the first success, p in (0, 1].
  std::uint64_t geometric(double p);
  /// Standard normal via Box-Muller; caches the second variate.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace f2p
