// stats.hpp - prime residue histograms and equidistribution reporting.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primefractal/primes.hpp"

namespace primefractal {

struct ResidueHistogram {
  int modulus = 2;
  std::size_t sample_count = 0;
  std::vector<std::uint64_t> counts;  // indexed by residue 0..modulus-1
  std::vector<int> coprime_classes;   // residues coprime to modulus
};

// Tallies a_n = p_n mod m over n = 1..count.
ResidueHistogram residue_histogram(int modulus, std::size_t count,
                                   std::uint64_t magnitude_cap = kDefaultSieveCap);

struct ClassStat {
  int residue = 0;
  std::uint64_t count = 0;
  double frequency = 0.0;  // count / N, the paper-style ratio
  bool coprime = false;
  double deviation = 0.0;  // |frequency - 1/phi|, coprime classes only
};

// Deviation and chi-square are report-only diagnostics: equidistribution is
// an asymptotic statement with no finite-N rate, so nothing here hard-fails
// on their magnitude.
struct EquidistributionReport {
  int modulus = 2;
  std::size_t sample_count = 0;
  std::size_t coprime_sample_count = 0;  // excludes primes dividing m
  std::size_t phi = 0;                   // number of coprime classes
  std::vector<ClassStat> classes;
  double max_deviation = 0.0;  // over coprime classes
  double chi_square = 0.0;     // over coprime classes vs uniform 1/phi
};

EquidistributionReport equidistribution_report(const ResidueHistogram& h);

}  // namespace primefractal
