// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace igarima {

/// Seedable generator with a bit-identical stream on every platform.
///
/// The mt19937_64 engine output is fully specified by the standard; the
/// std::*_distribution adapters are not, so the uniform and exponential
/// mappings are spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw strictly inside (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential draw with the given rate, strictly positive.
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace igarima
