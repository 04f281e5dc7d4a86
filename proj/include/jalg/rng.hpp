#ifndef JALG_RNG_HPP
#define JALG_RNG_HPP

#include <cstdint>
#include <string>

#include "jalg/scalar.hpp"

namespace jalg {

/// Deterministic splitmix64 stream. Every randomized sweep in the project
/// draws from one of these so that a (seed, check-id) pair fully determines
/// the output bytes.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent substream keyed by a label, so checks cannot perturb each
  /// other's draws when run in a different order.
  static Rng keyed(std::uint64_t seed, const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return Rng(seed ^ h);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long int_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  long nonzero_int(long bound) {
    long v = int_in(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  /// Small rational with numerator in [-num_bound, num_bound] and denominator
  /// in [1, den_bound].
  Rational rational(long num_bound, long den_bound) {
    return Rational(int_in(-num_bound, num_bound), int_in(1, den_bound));
  }

  Rational nonzero_rational(long num_bound, long den_bound) {
    return Rational(nonzero_int(num_bound), int_in(1, den_bound));
  }

  Rational positive_rational(long num_bound, long den_bound) {
    return Rational(int_in(1, num_bound), int_in(1, den_bound));
  }

  GaussianRational gaussian(long num_bound, long den_bound) {
    Rational re = rational(num_bound, den_bound);
    Rational im = rational(num_bound, den_bound);
    return GaussianRational(re, im);
  }

private:
  std::uint64_t state_;
};

}  // namespace jalg

#endif
