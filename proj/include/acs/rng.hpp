#ifndef ACS_RNG_HPP
#define ACS_RNG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>

namespace acs {

// Counter-based 64-bit generator in SplitMix64 form (Steele, Lea, Flood,
// "Fast splittable pseudorandom number generators", OOPSLA 2014): output i
// is the SplitMix64 finalizer applied to seed + (i+1)*gamma.  The value at
// any counter is addressable directly, so independent trial streams derive
// from (seed, counter) pairs without sharing state, and sequences are
// identical across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double uniform01();

  // Uniform integer in [0, bound); unbiased via rejection. bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // +1 or -1 with equal probability.
  double rademacher();

  // exp(2*pi*i*u) with u uniform: uniform on the complex unit circle.
  std::complex<double> steinhaus();

  // Standard normal via Box-Muller (two counter values per call).
  double gaussian();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Derives a stream seed from structured parts (master seed, experiment id,
// grid position, trial index, ...) by cascading the SplitMix64 finalizer.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

}  // namespace acs

#endif  // ACS_RNG_HPP
