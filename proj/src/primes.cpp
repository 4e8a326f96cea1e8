// primes.cpp - segmented sieve of Eratosthenes, extended on demand.

#include "primefractal/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace primefractal {

namespace {

// Odd values per segment; segments span 2 * kSegmentOdds integers.
constexpr std::size_t kSegmentOdds = std::size_t{1} << 19;

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PrimeStream::PrimeStream(std::uint64_t magnitude_cap) : cap_(magnitude_cap) {
  if (cap_ < 2) throw InvalidParams("sieve cap must be at least 2");
  primes_.push_back(2);
}

void PrimeStream::ensure_base_primes(std::uint64_t limit) {
  if (limit <= base_limit_) return;
  std::uint64_t new_limit = std::max(limit, base_limit_ * 2);
  std::vector<char> is_comp(new_limit + 1, 0);
  base_primes_.clear();
  for (std::uint64_t i = 3; i <= new_limit; i += 2) {
    if (is_comp[i]) continue;
    base_primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= new_limit; j += 2 * i) is_comp[j] = 1;
  }
  base_limit_ = new_limit;
}

void PrimeStream::sieve_next_segment() {
  const std::uint64_t lo = segment_lo_;  // odd
  const std::size_t count =
      std::min<std::uint64_t>(kSegmentOdds, (cap_ - lo) / 2 + 1);
  const std::uint64_t hi = lo + 2 * (count - 1);

  ensure_base_primes(isqrt_u64(hi));
  composite_.assign(count, 0);

  for (std::uint32_t p : base_primes_) {
    const std::uint64_t p64 = p;
    if (p64 * p64 > hi) break;
    std::uint64_t start = std::max(p64 * p64, ((lo + p64 - 1) / p64) * p64);
    if (start % 2 == 0) start += p64;
    for (std::uint64_t v = start; v <= hi; v += 2 * p64)
      composite_[(v - lo) / 2] = 1;
  }

  for (std::size_t i = 0; i < count; ++i)
    if (!composite_[i]) primes_.push_back(lo + 2 * i);

  segment_lo_ = hi + 2;
}

void PrimeStream::extend_to_count(std::size_t n) {
  while (primes_.size() < n) {
    if (segment_lo_ > cap_)
      throw SieveCapExceeded("prime " + std::to_string(n) +
                             " exceeds the sieve cap " + std::to_string(cap_));
    sieve_next_segment();
  }
}

std::uint64_t PrimeStream::prime(std::size_t n) {
  if (n == 0) throw InvalidParams("prime indices are 1-based");
  extend_to_count(n);
  return primes_[n - 1];
}

std::uint64_t PrimeStream::next() {
  std::uint64_t p = prime(next_index_);
  ++next_index_;
  return p;
}

std::uint64_t nth_prime(std::size_t n, std::uint64_t magnitude_cap) {
  PrimeStream stream(magnitude_cap);
  return stream.prime(n);
}

std::vector<int> residues(int modulus, std::size_t count, std::uint64_t magnitude_cap) {
  if (count == 0) throw InvalidParams("residue count must be positive");
  ResidueSequence seq(modulus, magnitude_cap);
  seq.value(count);
  return {seq.values().begin(), seq.values().begin() + static_cast<long>(count)};
}

ResidueSequence::ResidueSequence(int modulus, std::uint64_t magnitude_cap)
    : modulus_(modulus), stream_(magnitude_cap) {
  if (modulus_ < 2) throw InvalidParams("modulus must be at least 2");
}

int ResidueSequence::value(std::size_t n) {
  if (n == 0) throw InvalidParams("residue indices are 1-based");
  while (values_.size() < n)
    values_.push_back(static_cast<int>(stream_.next() % static_cast<std::uint64_t>(modulus_)));
  return values_[n - 1];
}

}  // namespace primefractal
