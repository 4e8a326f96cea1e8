// measure.hpp - finite-depth natural mass distribution: exact brackets,
// consistency, the decay bound, and s-sums over canonical covers.
#pragma once

#include <cstddef>
#include <cstdint>

#include "primefractal/construction.hpp"
#include "primefractal/rational.hpp"

namespace primefractal {

struct QueryInterval {
  Rational lo;
  Rational hi;

  QueryInterval(Rational lo_, Rational hi_);  // validates 0 <= lo <= hi <= 1

  Rational length() const { return hi - lo; }
};

// Exact bounds on the limit measure of an interval, at a fixed depth:
//   lower = (# basic intervals contained in J)   * k^-n
//   upper = (# basic intervals intersecting J)   * k^-n
// Closed-interval conventions: a shared endpoint counts as intersecting.
struct MeasureBracket {
  std::size_t depth = 0;
  Rational lower;
  Rational upper;
};

// Mass k^-depth of one basic interval; throws NotAMember if `numerator`
// is not part of the depth-`depth` level set.
Rational interval_mass(const Construction& con, const Int& numerator,
                       std::size_t depth);

MeasureBracket measure_bracket(const LevelSet& ls, const QueryInterval& J);
MeasureBracket measure_bracket(const Construction& con, const QueryInterval& J,
                               std::size_t depth);

// Every depth-n basic interval splits its mass equally over exactly k
// children one level down.
bool consistency_check(const Construction& con, std::size_t depth);

struct DecayReport {
  std::size_t depth = 0;
  std::size_t trials = 0;
  // max over tested J of upper(J)^4 / |J|, exact. The decay bound with
  // C = 4 and exponent 1/4 says this stays <= 256 when m = k^4.
  Rational max_ratio_4th_power;
  QueryInterval worst_interval{Rational(0), Rational(1)};
  // max over tested J of upper(J) / |J|^s with s = log k / log m (float,
  // report-only for parameters where s != 1/4).
  double max_ratio = 0.0;
  bool bound_satisfied = false;  // max_ratio_4th_power <= 256
};

// Tests the measure decay bound on `trials` seeded random intervals plus
// the full adversarial aligned set (each basic interval, each one inflated
// by one grid unit, each gap between consecutive basic intervals). Random
// widths stay within [m^-(depth+1), 1] so the fixed-depth bracket is valid
// for every sampled interval.
DecayReport decay_check(const Construction& con, std::size_t depth,
                        std::size_t trials, std::uint64_t seed);

// Sum of |I|^s over the basic intervals: count * m^(-depth*s).
// Exact whenever m is a perfect q-th power for s = p/q.
struct SSum {
  bool exact = false;
  Rational exact_value;  // valid when exact
  double approx = 0.0;   // always filled
};

SSum s_sum(const LevelSet& ls, const Rational& s);
double s_sum(const LevelSet& ls, double s);

}  // namespace primefractal
