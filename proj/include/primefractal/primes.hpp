// primes.hpp - incremental prime generation and residue sequences.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primefractal/errors.hpp"

namespace primefractal {

// Hard cap on prime magnitude; keeps resource errors deterministic.
inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

// Segmented sieve that materializes primes on demand. prime(n) is random
// access once generated; generation itself is sequential.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t magnitude_cap = kDefaultSieveCap);

  // 1-based: prime(1) == 2. Throws SieveCapExceeded when the n-th prime
  // would exceed the magnitude cap.
  std::uint64_t prime(std::size_t n);

  // Emits prime(next_index()) and advances.
  std::uint64_t next();

  std::size_t next_index() const { return next_index_; }
  std::uint64_t magnitude_cap() const { return cap_; }
  std::size_t generated() const { return primes_.size(); }

 private:
  void extend_to_count(std::size_t n);
  void sieve_next_segment();
  void ensure_base_primes(std::uint64_t limit);

  std::uint64_t cap_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint32_t> base_primes_;  // odd primes <= base_limit_
  std::uint64_t base_limit_ = 2;
  std::uint64_t segment_lo_ = 3;  // next unsieved odd value
  std::size_t next_index_ = 1;
  std::vector<char> composite_;  // per-segment scratch
};

std::uint64_t nth_prime(std::size_t n, std::uint64_t magnitude_cap = kDefaultSieveCap);

// [p_1 mod m, ..., p_count mod m]
std::vector<int> residues(int modulus, std::size_t count,
                          std::uint64_t magnitude_cap = kDefaultSieveCap);

// Lazily extended view of a_n = p_n mod m.
class ResidueSequence {
 public:
  explicit ResidueSequence(int modulus, std::uint64_t magnitude_cap = kDefaultSieveCap);

  int modulus() const { return modulus_; }

  // 1-based: value(1) = p_1 mod m.
  int value(std::size_t n);

  const std::vector<int>& values() const { return values_; }

 private:
  int modulus_;
  PrimeStream stream_;
  std::vector<int> values_;
};

}  // namespace primefractal
