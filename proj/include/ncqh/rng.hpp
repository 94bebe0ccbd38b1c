#pragma once

#include <cstdint>

#include "ncqh/rational.hpp"

namespace ncqh {

/// SplitMix64 generator. Fully specified output sequence, so seeded runs are
/// reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small rational with numerator in [-3,3] and denominator in [1,3].
  Rat smallRat() { return Rat(range(-3, 3), range(1, 3)); }

  /// Derives an independent stream; used to keep parallel and serial
  /// campaigns in agreement.
  Rng split(std::uint64_t stream) const {
    return Rng(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ncqh
