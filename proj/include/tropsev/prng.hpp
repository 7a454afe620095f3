#ifndef TROPSEV_PRNG_HPP
#define TROPSEV_PRNG_HPP

#include <cstdint>

#include "tropsev/rat.hpp"

namespace tropsev {

/// splitmix64. Used instead of <random> distributions so that identical
/// seeds give identical output on every platform.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Dyadic rational in [0, 1) with 48 bits of resolution.
  Rat unit_rat() {
    std::uint64_t bits = next() >> 16;
    Int num(static_cast<unsigned long>(bits));
    Int den = 1;
    den <<= 48;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tropsev

#endif
