// stats.cpp

#include "primefractal/stats.hpp"

#include <cmath>
#include <numeric>

namespace primefractal {

ResidueHistogram residue_histogram(int modulus, std::size_t count,
                                   std::uint64_t magnitude_cap) {
  if (modulus < 2) throw InvalidParams("modulus must be at least 2");
  if (count == 0) throw InvalidParams("sample count must be positive");

  ResidueHistogram h;
  h.modulus = modulus;
  h.sample_count = count;
  h.counts.assign(static_cast<std::size_t>(modulus), 0);

  PrimeStream stream(magnitude_cap);
  for (std::size_t n = 0; n < count; ++n)
    ++h.counts[stream.next() % static_cast<std::uint64_t>(modulus)];

  for (int r = 0; r < modulus; ++r)
    if (std::gcd(r, modulus) == 1) h.coprime_classes.push_back(r);
  return h;
}

EquidistributionReport equidistribution_report(const ResidueHistogram& h) {
  if (h.counts.size() != static_cast<std::size_t>(h.modulus))
    throw InvalidParams("histogram does not match its modulus");

  EquidistributionReport report;
  report.modulus = h.modulus;
  report.sample_count = h.sample_count;
  report.phi = h.coprime_classes.size();
  if (report.phi == 0) throw InvalidParams("modulus has no coprime classes");

  const auto n = static_cast<double>(h.sample_count);
  std::size_t coprime_total = 0;
  for (int r : h.coprime_classes)
    coprime_total += h.counts[static_cast<std::size_t>(r)];
  report.coprime_sample_count = coprime_total;

  const double expected = 1.0 / static_cast<double>(report.phi);
  report.classes.reserve(h.counts.size());
  for (int r = 0; r < h.modulus; ++r) {
    ClassStat stat;
    stat.residue = r;
    stat.count = h.counts[static_cast<std::size_t>(r)];
    stat.frequency = static_cast<double>(stat.count) / n;
    stat.coprime = std::gcd(r, h.modulus) == 1;
    if (stat.coprime) {
      stat.deviation = std::abs(stat.frequency - expected);
      report.max_deviation = std::max(report.max_deviation, stat.deviation);
      // Pearson statistic against uniform over the coprime classes, using
      // only the samples that landed in coprime classes.
      if (coprime_total > 0) {
        const double e = static_cast<double>(coprime_total) * expected;
        const double d = static_cast<double>(stat.count) - e;
        report.chi_square += d * d / e;
      }
    }
    report.classes.push_back(stat);
  }
  return report;
}

}  // namespace primefractal
