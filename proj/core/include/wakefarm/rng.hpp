#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace wakefarm {

struct RngSeed {
  std::uint64_t value = 0;
};

/// xoshiro256** seeded through splitmix64.
///
/// Every draw used by the library goes through the members below, never
/// through <random> distributions, so a fixed seed produces the same stream
/// on every platform:
///   uniform()    -> (next() >> 11) * 2^-53, in [0, 1)
///   uniform(a,b) -> a + (b - a) * uniform()
///   below(n)     -> rejection sampling on next(), unbiased in [0, n)
///   normal()     -> Box-Muller on two uniform() draws, no caching
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(RngSeed seed);
  explicit Rng(std::uint64_t seed) : Rng(RngSeed{seed}) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type next();
  result_type operator()() { return next(); }

  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t n);
  double normal();

 private:
  std::array<std::uint64_t, 4> state_{};
};

/// splitmix64 step; also used to derive independent sub-seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// A child seed that is a fixed function of (parent, stream).
RngSeed derive_seed(RngSeed parent, std::uint64_t stream);

}  // namespace wakefarm
