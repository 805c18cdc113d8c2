#pragma once

/// \file sampling.hpp
/// Deterministic random sampling for validators and property checks.
/// mt19937_64 produces the same stream on every conforming platform;
/// bounded draws use plain modulo reduction here because the standard
/// library distributions are not bit-reproducible across implementations.

#include <hahn/group.hpp>

#include <cstdint>
#include <random>

namespace hahn {

/// Independent per-check stream derived from one user-facing seed.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t check_id) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (check_id + 1));
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  bool coin() { return (rng_() & 1) != 0; }

  /// Integer in [lo, hi], both ends included. Modulo bias is acceptable
  /// for test sampling and keeps the draw platform-independent.
  long long int_in(long long lo, long long hi);

  /// Index in [0, n); n must be positive.
  std::size_t index(std::size_t n);

  /// Rational with |numerator| <= max_num and denominator in [1, max_den].
  Scalar rational(long long max_num, long long max_den);
  Scalar nonzero_rational(long long max_num, long long max_den);

  GroupElement element(IndexSet index, long long max_num, long long max_den);
  GroupElement nonzero_element(IndexSet index, long long max_num,
                               long long max_den);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hahn
