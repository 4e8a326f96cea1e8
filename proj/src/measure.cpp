// measure.cpp

#include "primefractal/measure.hpp"

#include <algorithm>
#include <cmath>

#include "primefractal/rng.hpp"

namespace primefractal {

QueryInterval::QueryInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();
  hi.canonicalize();
  if (lo < 0 || hi > 1 || lo > hi)
    throw InvalidParams("query interval must satisfy 0 <= lo <= hi <= 1");
}

Rational interval_mass(const Construction& con, const Int& numerator,
                       std::size_t depth) {
  con.numerator_to_address(numerator, depth);  // throws unless a member
  return inv_power(static_cast<unsigned long>(con.params().branch), depth);
}

namespace {

// Count of numerators c in [first, last], by binary search.
std::size_t count_in_range(const std::vector<Int>& sorted, const Int& first,
                           const Int& last) {
  if (last < first) return 0;
  auto lo = std::lower_bound(sorted.begin(), sorted.end(), first);
  auto hi = std::upper_bound(sorted.begin(), sorted.end(), last);
  return static_cast<std::size_t>(hi - lo);
}

Rational scaled_count(std::size_t count, int branch, std::size_t depth) {
  Rational out(Int(static_cast<unsigned long>(count)),
               ipow(static_cast<unsigned long>(branch),
                    static_cast<unsigned long>(depth)));
  out.canonicalize();
  return out;
}

}  // namespace

MeasureBracket measure_bracket(const LevelSet& ls, const QueryInterval& J) {
  const Int scale = ipow(static_cast<unsigned long>(ls.params.base),
                         static_cast<unsigned long>(ls.depth));

  // Contained: lo <= c/m^n and (c+1)/m^n <= hi.
  const Int c_first = ceil_div(J.lo.get_num() * scale, J.lo.get_den());
  const Int c_last =
      floor_div(J.hi.get_num() * scale - J.hi.get_den(), J.hi.get_den());
  // Intersecting (closed intervals): c/m^n <= hi and lo <= (c+1)/m^n.
  const Int i_first = ceil_div(J.lo.get_num() * scale - J.lo.get_den(), J.lo.get_den());
  const Int i_last = floor_div(J.hi.get_num() * scale, J.hi.get_den());

  MeasureBracket out;
  out.depth = ls.depth;
  out.lower = scaled_count(count_in_range(ls.numerators, c_first, c_last),
                           ls.params.branch, ls.depth);
  out.upper = scaled_count(count_in_range(ls.numerators, i_first, i_last),
                           ls.params.branch, ls.depth);
  return out;
}

MeasureBracket measure_bracket(const Construction& con, const QueryInterval& J,
                               std::size_t depth) {
  return measure_bracket(con.build(depth), J);
}

bool consistency_check(const Construction& con, std::size_t depth) {
  const LevelSet parents = con.build(depth);
  const LevelSet children = con.expand(parents);
  const int m = con.params().base;
  const int k = con.params().branch;

  std::size_t child = 0;
  for (const Int& p : parents.numerators) {
    int found = 0;
    while (child < children.numerators.size() &&
           floor_div(children.numerators[child], Int(m)) == p) {
      ++found;
      ++child;
    }
    if (found != k) return false;
  }
  return child == children.numerators.size();
}

namespace {

// One candidate interval: fold its exact bracket into the running report.
void fold_interval(const LevelSet& ls, const QueryInterval& J, double s,
                   DecayReport& report) {
  const Rational len = J.length();
  if (len == 0) return;
  const Rational upper = measure_bracket(ls, J).upper;

  Rational ratio4 = upper * upper;
  ratio4 = ratio4 * ratio4 / len;
  if (report.max_ratio_4th_power < 0 || ratio4 > report.max_ratio_4th_power) {
    report.max_ratio_4th_power = ratio4;
    report.worst_interval = J;
  }

  if (upper > 0) {
    const double log_upper = log_int(upper.get_num()) - log_int(upper.get_den());
    const double log_len = log_int(len.get_num()) - log_int(len.get_den());
    report.max_ratio = std::max(report.max_ratio,
                                std::exp(log_upper - s * log_len));
  }
}

}  // namespace

DecayReport decay_check(const Construction& con, std::size_t depth,
                        std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidParams("decay check needs at least one trial");
  const LevelSet ls = con.build(depth);
  const int m = con.params().base;
  const Int scale = ipow(static_cast<unsigned long>(m),
                         static_cast<unsigned long>(depth));
  const double s = std::log(static_cast<double>(con.params().branch)) /
                   std::log(static_cast<double>(m));

  DecayReport report;
  report.depth = depth;
  report.trials = trials;
  report.max_ratio_4th_power = Rational(-1);

  // Aligned adversarial set: the whole line, every basic interval, every
  // basic interval inflated by one grid unit each side, every gap between
  // consecutive basic intervals, and both edge gaps.
  fold_interval(ls, QueryInterval(Rational(0), Rational(1)), s, report);
  for (std::size_t i = 0; i < ls.numerators.size(); ++i) {
    const Int& c = ls.numerators[i];
    fold_interval(ls, QueryInterval(make_rational(c, scale), make_rational(c + 1, scale)),
                  s, report);
    const Int lo = c > 0 ? Int(c - 1) : Int(0);
    const Int hi = c + 2 < scale ? Int(c + 2) : scale;
    fold_interval(ls, QueryInterval(make_rational(lo, scale), make_rational(hi, scale)),
                  s, report);
    if (i + 1 < ls.numerators.size())
      fold_interval(ls,
                    QueryInterval(make_rational(c + 1, scale),
                                  make_rational(ls.numerators[i + 1], scale)),
                    s, report);
  }
  if (!ls.numerators.empty()) {
    fold_interval(ls, QueryInterval(Rational(0), make_rational(ls.numerators.front(), scale)),
                  s, report);
    fold_interval(ls,
                  QueryInterval(make_rational(ls.numerators.back() + 1, scale), Rational(1)),
                  s, report);
  }

  // Seeded random intervals. Widths stay in [m^-(t+1), m^-t] for t <= depth,
  // so every sampled J is no finer than one grid unit and the depth-n upper
  // bracket is a faithful stand-in for the limit measure.
  const Int D = ipow(2, 53);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SplitMix64 g(mix64(seed, trial));
    const auto t = static_cast<unsigned long>(g.below(static_cast<std::uint64_t>(depth) + 1));
    const Int r1(static_cast<unsigned long>(g.below((std::uint64_t{1} << 53) + 1)));
    const Int r2(static_cast<unsigned long>(g.below((std::uint64_t{1} << 53) + 1)));

    // w = m^-(t+1) * (1 + (m-1) * r1 / D), uniform grid over [m^-(t+1), m^-t].
    const Rational w = make_rational(D + (m - 1) * r1,
                                     D * ipow(static_cast<unsigned long>(m), t + 1));
    const Rational lo = (Rational(1) - w) * make_rational(r2, D);
    fold_interval(ls, QueryInterval(lo, lo + w), s, report);
  }

  report.bound_satisfied = report.max_ratio_4th_power <= 256;
  return report;
}

SSum s_sum(const LevelSet& ls, const Rational& s) {
  if (ls.numerators.empty()) throw InvalidParams("s-sum needs a nonempty level set");
  if (s < 0) throw InvalidParams("exponent must be non-negative");

  SSum out;
  const Int count(static_cast<unsigned long>(ls.numerators.size()));
  const auto n = static_cast<unsigned long>(ls.depth);
  const Rational sc = s;  // canonical p/q

  // count * m^(-n*s) is exact when m = root^q: m^(n*p/q) = root^(n*p).
  if (sc.get_den().fits_ulong_p() && sc.get_num().fits_ulong_p()) {
    const auto q = static_cast<unsigned long>(sc.get_den().get_ui());
    if (auto root = perfect_root(Int(ls.params.base), q)) {
      const auto p = static_cast<unsigned long>(sc.get_num().get_ui());
      out.exact = true;
      out.exact_value = make_rational(count, ipow(*root, n * p));
    }
  }

  const double sd = sc.get_d();
  out.approx = std::exp(log_int(count) -
                        static_cast<double>(n) * sd *
                            std::log(static_cast<double>(ls.params.base)));
  return out;
}

double s_sum(const LevelSet& ls, double s) {
  if (ls.numerators.empty()) throw InvalidParams("s-sum needs a nonempty level set");
  if (s < 0) throw InvalidParams("exponent must be non-negative");
  const Int count(static_cast<unsigned long>(ls.numerators.size()));
  return std::exp(log_int(count) -
                  static_cast<double>(ls.depth) * s *
                      std::log(static_cast<double>(ls.params.base)));
}

}  // namespace primefractal
