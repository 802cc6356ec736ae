#pragma once

#include "nesthilb/vertex.hpp"

#include <cstdint>
#include <random>

namespace nesthilb {

/// Seeded source of generic integer points (x, y). Built on mt19937_64,
/// whose output sequence is fixed by the standard, so draws are identical on
/// every platform for a given seed.
class SpecializationSource {
 public:
  static constexpr std::uint64_t kDefaultSeed = 7919;
  static constexpr long kRange = 1000003;

  explicit SpecializationSource(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  Specialization draw() {
    auto coord = [this] {
      long v = 0;
      while (v == 0) v = static_cast<long>(rng_() % (2 * kRange + 1)) - kRange;
      return Rational(v);
    };
    Rational x = coord();
    Rational y = coord();
    return {x, y};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nesthilb
