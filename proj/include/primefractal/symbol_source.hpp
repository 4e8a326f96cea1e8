// symbol_source.hpp - the digit sequences a_n that drive the construction.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "primefractal/primes.hpp"

namespace primefractal {

// Selector for where the level symbols a_n come from.
struct SourceSpec {
  enum class Kind { Primes, Constant, List, Seeded };

  Kind kind = Kind::Primes;
  int constant = 0;                // Kind::Constant
  std::vector<int> values;         // Kind::List
  std::uint64_t seed = 0;          // Kind::Seeded

  static SourceSpec primes();
  static SourceSpec constant_value(int v);
  static SourceSpec explicit_list(std::vector<int> v);
  static SourceSpec seeded(std::uint64_t s);

  // "primes" | "constant:<v>" | "seeded:<seed>" | "list:<v1>,<v2>,...".
  // List descriptors carry the full contents so descriptors round-trip;
  // the CLI resolves "list:<path>" into contents before reaching here.
  static SourceSpec parse(const std::string& descriptor);

  std::string descriptor() const;

  bool operator==(const SourceSpec&) const = default;
};

// Symbol sequence resolved against a fixed base m: at(n) = a_n in {0..m-1}.
class SymbolSequence {
 public:
  SymbolSequence(SourceSpec spec, int base,
                 std::uint64_t sieve_cap = kDefaultSieveCap);

  int base() const { return base_; }
  const SourceSpec& spec() const { return spec_; }

  // 1-based level index. Throws SourceExhausted when an explicit list is
  // shorter than the requested level.
  int at(std::size_t level);

 private:
  SourceSpec spec_;
  int base_;
  std::optional<ResidueSequence> residues_;  // Kind::Primes only
};

}  // namespace primefractal
