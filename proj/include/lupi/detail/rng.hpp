#pragma once

#include <cstdint>
#include <random>

#include "lupi/types.hpp"

namespace lupi::detail {

// mt19937_64 with a fixed 53-bit uniform mapping and inverse-CDF categorical
// sampling, so sampled traces are identical across standard libraries
// (std::uniform_real_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Index i with probability probs[i]; probs must be a distribution.
  int categorical(const Eigen::Ref<const Vector>& probs) {
    const double u = uniform();
    double acc = 0.0;
    const int n = static_cast<int>(probs.size());
    for (int i = 0; i < n; ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    return n - 1;  // guard against accumulated rounding
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lupi::detail
