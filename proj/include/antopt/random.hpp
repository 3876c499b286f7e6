#pragma once

#include <cstdint>
#include <random>

namespace antopt {

/// Deterministic random stream. A given seed always yields the same sequence
/// of draws: the engine is mt19937_64 (bit-exact across platforms per the
/// standard) and both transforms below are implemented here rather than
/// delegated to the standard library's unspecified distributions.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  /// Uniform draw in [0, 1).
  double uniform01();

  /// Uniform draw in [lo, hi). Requires lo < hi and both finite.
  double uniform(double lo, double hi);

  /// Standard normal draw (Marsaglia polar method, spare value cached).
  double standard_normal();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace antopt
