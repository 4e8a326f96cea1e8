// construction.hpp - exact level sets of the generalized keep-k-of-m construction.
//
// A level set at depth n is a sorted list of numerators c, each standing for
// the closed interval [c/m^n, (c+1)/m^n]. Numerators are exact integers; no
// interval is ever represented in floating point.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primefractal/rational.hpp"
#include "primefractal/symbol_source.hpp"

namespace primefractal {

inline constexpr std::uint64_t kDefaultMaxIntervals = std::uint64_t{1} << 24;

struct ConstructionParams {
  int base = 16;    // m: subintervals per split
  int branch = 2;   // k: subintervals kept per split, 1 <= k < m
  SourceSpec source;
  std::uint64_t max_intervals = kDefaultMaxIntervals;
  std::uint64_t sieve_cap = kDefaultSieveCap;

  int gap_step() const { return base / branch; }  // floor(m/k)

  void validate() const;

  bool operator==(const ConstructionParams&) const = default;
};

struct LevelSet {
  ConstructionParams params;
  std::size_t depth = 0;
  std::vector<Int> numerators;  // strictly increasing, 0 <= c < base^depth

  Rational interval_length() const;   // base^-depth
  Rational lebesgue_measure() const;  // |numerators| * base^-depth
};

// Word sigma_1..sigma_n, each letter in {0..k-1}, selecting which retained
// child to take at each level.
struct Address {
  std::vector<int> word;
};

// x = sum digits[i] * base^-(i+1). When `terminating` is set the listed
// digits are the whole expansion (missing digits are zero).
struct DigitExpansion {
  int base = 16;
  std::vector<int> digits;
  bool terminating = true;
};

struct MemberVerdict {
  bool member = false;
  std::vector<int> witness;  // first `depth` digits of a qualifying expansion
};

// Binds parameters to a memoized symbol sequence. All operations are pure
// with respect to observable state; the symbol cache only ever extends.
class Construction {
 public:
  explicit Construction(ConstructionParams params);

  const ConstructionParams& params() const { return params_; }

  // The k child indices retained at `level`, in branch (j) order:
  // (a_level + j*floor(m/k)) mod m for j = 0..k-1. Always distinct.
  std::vector<int> retained_indices(std::size_t level) const;

  LevelSet build(std::size_t depth) const;
  LevelSet expand(const LevelSet& ls) const;

  Int address_to_numerator(const Address& addr) const;
  Address numerator_to_address(const Int& numerator, std::size_t depth) const;

  // True iff some base-m expansion of x has retained digits through `depth`.
  // Terminating expansions also try their trailing-(m-1) twin.
  MemberVerdict member_prefix(const DigitExpansion& x, std::size_t depth) const;
  MemberVerdict member_value(const Rational& x, std::size_t depth) const;

  // Minimum distance between the closures of two retained children of one
  // parent, exact with denominator base^level. Requires branch >= 2.
  Rational min_sibling_gap(std::size_t level) const;

 private:
  void check_budget(const Int& interval_count) const;

  ConstructionParams params_;
  mutable SymbolSequence symbols_;
};

}  // namespace primefractal
