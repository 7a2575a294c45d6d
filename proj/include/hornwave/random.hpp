#pragma once

#include <cstdint>
#include <random>

namespace hornwave {

/// Uniform doubles from mt19937_64 bits, identical on every standard library
/// (std::uniform_real_distribution is not).
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : gen_(seed) {}

  double operator()(double lo, double hi) {
    const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hornwave
