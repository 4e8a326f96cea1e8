// dimension.cpp

#include "primefractal/dimension.hpp"

#include <cmath>

namespace primefractal {

BoxCountSeries exact_box_counts(const Construction& con, std::size_t n_max) {
  BoxCountSeries series;
  series.params = con.params();
  series.entries.reserve(n_max + 1);

  LevelSet ls = con.build(0);
  series.entries.emplace_back(0, Int(static_cast<unsigned long>(ls.numerators.size())));
  for (std::size_t n = 1; n <= n_max; ++n) {
    ls = con.expand(ls);
    series.entries.emplace_back(n, Int(static_cast<unsigned long>(ls.numerators.size())));
  }
  return series;
}

Int box_count_at_scale(const LevelSet& ls, const Rational& eps) {
  if (eps <= 0 || eps > 1) throw InvalidParams("scale must lie in (0, 1]");
  const Int scale = ipow(static_cast<unsigned long>(ls.params.base),
                         static_cast<unsigned long>(ls.depth));
  const Int& p = eps.get_num();
  const Int& q = eps.get_den();
  if (p * scale < q)
    throw InvalidParams("scale " + rational_str(eps) +
                        " is finer than the level resolution");

  // Cell i = [i*eps, (i+1)*eps] overlaps [c/m^n, (c+1)/m^n] in positive
  // length iff i*eps < (c+1)/m^n and c/m^n < (i+1)*eps, which pins i to
  // [floor(cq/(m^n p)), ceil((c+1)q/(m^n p)) - 1].
  const Int denom = scale * p;
  Int count = 0;
  Int covered_hi = -1;  // highest cell index already counted
  for (const Int& c : ls.numerators) {
    Int i_lo = floor_div(c * q, denom);
    const Int i_hi = ceil_div((c + 1) * q, denom) - 1;
    if (i_lo <= covered_hi) i_lo = covered_hi + 1;
    if (i_hi >= i_lo) {
      count += i_hi - i_lo + 1;
      covered_hi = i_hi;
    }
  }
  return count;
}

DimensionReport estimate_dimension(const BoxCountSeries& series) {
  if (series.entries.size() < 2)
    throw InvalidParams("dimension estimation needs at least two scales");

  const double log_m = std::log(static_cast<double>(series.params.base));
  DimensionReport report;
  report.theoretical = std::log(static_cast<double>(series.params.branch)) / log_m;

  // Least squares of y = log N_n against x = n log m.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, count] : series.entries) {
    const double x = static_cast<double>(n) * log_m;
    const double y = log_int(count);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto len = static_cast<double>(series.entries.size());
  const double var = len * sxx - sx * sx;
  if (var == 0) throw InvalidParams("dimension estimation needs distinct scales");
  report.estimated_slope = (len * sxy - sx * sy) / var;

  double residual = 0;
  for (const auto& [n, count] : series.entries) {
    if (n == 0) continue;
    const double ratio = log_int(count) / (static_cast<double>(n) * log_m);
    residual = std::max(residual, std::abs(ratio - report.theoretical));
  }
  report.residual = residual;
  return report;
}

}  // namespace primefractal
