#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "primefractal/stats.hpp"

namespace pf = primefractal;

namespace {

// Trial-division oracle, independent of the sieve.
std::vector<std::uint64_t> trial_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t v = 2; primes.size() < count; ++v) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        prime = false;
        break;
      }
    if (prime) primes.push_back(v);
  }
  return primes;
}

}  // namespace

TEST_CASE("histogram of the first five primes mod 16") {
  const pf::ResidueHistogram h = pf::residue_histogram(16, 5);
  CHECK(h.sample_count == 5);
  std::vector<std::uint64_t> expected(16, 0);
  expected[2] = expected[3] = expected[5] = expected[7] = expected[11] = 1;
  CHECK(h.counts == expected);
  CHECK(h.coprime_classes == std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15});
}

TEST_CASE("histogram mod 2 of a single prime") {
  const pf::ResidueHistogram h = pf::residue_histogram(2, 1);
  CHECK(h.counts == std::vector<std::uint64_t>{1, 0});
  const pf::EquidistributionReport report = pf::equidistribution_report(h);
  CHECK(report.phi == 1);
  CHECK(report.coprime_sample_count == 0);
  CHECK(report.chi_square == 0.0);
}

TEST_CASE("histogram counts match trial division") {
  const auto oracle = trial_primes(10000);
  for (int modulus : {7, 16}) {
    std::vector<std::uint64_t> expected(static_cast<std::size_t>(modulus), 0);
    for (std::uint64_t p : oracle)
      ++expected[p % static_cast<std::uint64_t>(modulus)];
    CHECK(pf::residue_histogram(modulus, oracle.size()).counts == expected);
  }
}

TEST_CASE("counts always sum to the sample count") {
  for (std::size_t count : {std::size_t{1}, std::size_t{97}, std::size_t{10000}}) {
    const pf::ResidueHistogram h = pf::residue_histogram(16, count);
    CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}) ==
          count);
  }
}

TEST_CASE("mod 16, every prime after 2 lands in an odd class") {
  const pf::ResidueHistogram h = pf::residue_histogram(16, 10000);
  for (int even = 0; even < 16; even += 2)
    CHECK(h.counts[static_cast<std::size_t>(even)] == (even == 2 ? 1 : 0));
}

TEST_CASE("equidistribution report fields") {
  const pf::ResidueHistogram h = pf::residue_histogram(16, 10000);
  const pf::EquidistributionReport report = pf::equidistribution_report(h);
  CHECK(report.modulus == 16);
  CHECK(report.sample_count == 10000);
  CHECK(report.phi == 8);
  CHECK(report.coprime_sample_count == 9999);  // p_1 = 2 is the lone exception
  REQUIRE(report.classes.size() == 16);

  double freq_total = 0;
  for (const pf::ClassStat& stat : report.classes) {
    CHECK(stat.frequency ==
          static_cast<double>(stat.count) / static_cast<double>(report.sample_count));
    freq_total += stat.frequency;
    if (stat.coprime) {
      // Every coprime class is hit well before 10^4 samples.
      CHECK(stat.count > 0);
      CHECK(stat.frequency < 1.0);
      CHECK(stat.deviation == doctest::Approx(std::abs(stat.frequency - 0.125)));
    }
  }
  CHECK(freq_total == doctest::Approx(1.0));
  CHECK(report.max_deviation > 0.0);
  CHECK(report.max_deviation < 0.125);  // crude sanity: nothing degenerate
  CHECK(report.chi_square > 0.0);
}

TEST_CASE("perfectly uniform synthetic histogram scores zero") {
  pf::ResidueHistogram h;
  h.modulus = 5;
  h.sample_count = 40;
  h.counts = {0, 10, 10, 10, 10};
  h.coprime_classes = {1, 2, 3, 4};
  const pf::EquidistributionReport report = pf::equidistribution_report(h);
  CHECK(report.max_deviation == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(report.chi_square == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("deviation shrinks from 10^4 to 10^5 samples") {
  const double d4 =
      pf::equidistribution_report(pf::residue_histogram(16, 10000)).max_deviation;
  const double d5 =
      pf::equidistribution_report(pf::residue_histogram(16, 100000)).max_deviation;
  CHECK(d5 < d4);
}

TEST_CASE("histograms are reproducible") {
  const pf::ResidueHistogram a = pf::residue_histogram(12, 5000);
  const pf::ResidueHistogram b = pf::residue_histogram(12, 5000);
  CHECK(a.counts == b.counts);
  CHECK(a.coprime_classes == b.coprime_classes);
}

TEST_CASE("stats input validation") {
  CHECK_THROWS_AS(pf::residue_histogram(1, 10), pf::InvalidParams);
  CHECK_THROWS_AS(pf::residue_histogram(16, 0), pf::InvalidParams);
  CHECK_THROWS_AS(pf::residue_histogram(16, 100, 100), pf::SieveCapExceeded);

  pf::ResidueHistogram h = pf::residue_histogram(16, 5);
  h.counts.pop_back();
  CHECK_THROWS_AS(pf::equidistribution_report(h), pf::InvalidParams);

  // Tiny samples are allowed: deviation metrics are report-only, so a
  // histogram with fewer samples than coprime classes still summarizes.
  const pf::EquidistributionReport tiny =
      pf::equidistribution_report(pf::residue_histogram(16, 4));
  CHECK(tiny.coprime_sample_count == 3);  // 3, 5, 7 of the first four primes
  CHECK(tiny.max_deviation > 0.0);
}
