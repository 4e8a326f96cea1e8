// dimension.hpp - exact box counts and log-log dimension estimation.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "primefractal/construction.hpp"
#include "primefractal/rational.hpp"

namespace primefractal {

// Exact counts N_n of grid cells of size base^-n occupied by the depth-n
// level set; N_n = branch^n by the counting argument.
struct BoxCountSeries {
  ConstructionParams params;
  std::vector<std::pair<std::size_t, Int>> entries;  // (n, N_n)
};

struct DimensionReport {
  double estimated_slope = 0.0;
  double theoretical = 0.0;  // log k / log m
  double residual = 0.0;     // max_n>=1 |log N_n / (n log m) - theoretical|
};

BoxCountSeries exact_box_counts(const Construction& con, std::size_t n_max);

// Number of size-eps grid cells sharing positive length with the level set.
// eps must satisfy base^-depth <= eps <= 1. At eps = base^-n this equals
// the exact count branch^n.
Int box_count_at_scale(const LevelSet& ls, const Rational& eps);

// Unweighted least-squares slope of log N_n against n log m.
DimensionReport estimate_dimension(const BoxCountSeries& series);

}  // namespace primefractal
