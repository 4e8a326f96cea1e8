// construction.cpp

#include "primefractal/construction.hpp"

#include <algorithm>
#include <string>

namespace primefractal {

void ConstructionParams::validate() const {
  if (base < 2) throw InvalidParams("base must be at least 2");
  if (branch < 1 || branch >= base)
    throw InvalidParams("branch must satisfy 1 <= branch < base");
  if (max_intervals == 0) throw InvalidParams("max_intervals must be positive");
}

Rational LevelSet::interval_length() const {
  return inv_power(static_cast<unsigned long>(params.base), depth);
}

Rational LevelSet::lebesgue_measure() const {
  Rational out(Int(static_cast<unsigned long>(numerators.size())),
               ipow(static_cast<unsigned long>(params.base), depth));
  out.canonicalize();
  return out;
}

Construction::Construction(ConstructionParams params)
    : params_(std::move(params)),
      symbols_((params_.validate(), params_.source), params_.base,
               params_.sieve_cap) {}

std::vector<int> Construction::retained_indices(std::size_t level) const {
  if (level == 0) throw InvalidParams("levels are 1-based");
  const int m = params_.base;
  const int step = params_.gap_step();
  const int a = symbols_.at(level);
  std::vector<int> out(static_cast<std::size_t>(params_.branch));
  for (int j = 0; j < params_.branch; ++j) out[static_cast<std::size_t>(j)] = (a + j * step) % m;
  return out;
}

void Construction::check_budget(const Int& interval_count) const {
  if (interval_count > Int(static_cast<unsigned long>(params_.max_intervals)))
    throw BudgetExceeded("level set would hold " + interval_count.get_str() +
                         " intervals; budget is " +
                         std::to_string(params_.max_intervals));
}

LevelSet Construction::expand(const LevelSet& ls) const {
  if (!(ls.params == params_))
    throw InvalidParams("level set was built with different parameters");
  check_budget(Int(static_cast<unsigned long>(ls.numerators.size())) * params_.branch);

  std::vector<int> retained = retained_indices(ls.depth + 1);
  std::sort(retained.begin(), retained.end());

  LevelSet out;
  out.params = params_;
  out.depth = ls.depth + 1;
  out.numerators.reserve(ls.numerators.size() * static_cast<std::size_t>(params_.branch));
  // Children of distinct parents occupy disjoint blocks [m*c, m*c + m - 1],
  // so emitting parents in order with sorted offsets keeps the list sorted.
  for (const Int& c : ls.numerators)
    for (int r : retained) out.numerators.push_back(c * params_.base + r);
  return out;
}

LevelSet Construction::build(std::size_t depth) const {
  check_budget(ipow(static_cast<unsigned long>(params_.branch),
                    static_cast<unsigned long>(depth)));
  LevelSet ls;
  ls.params = params_;
  ls.depth = 0;
  ls.numerators = {Int(0)};
  for (std::size_t n = 0; n < depth; ++n) ls = expand(ls);
  return ls;
}

Int Construction::address_to_numerator(const Address& addr) const {
  Int c = 0;
  for (std::size_t i = 0; i < addr.word.size(); ++i) {
    const int letter = addr.word[i];
    if (letter < 0 || letter >= params_.branch)
      throw InvalidParams("address letter " + std::to_string(letter) +
                          " out of range at level " + std::to_string(i + 1));
    c = c * params_.base + retained_indices(i + 1)[static_cast<std::size_t>(letter)];
  }
  return c;
}

Address Construction::numerator_to_address(const Int& numerator,
                                           std::size_t depth) const {
  if (numerator < 0 || numerator >= ipow(static_cast<unsigned long>(params_.base),
                                         static_cast<unsigned long>(depth)))
    throw InvalidParams("numerator out of range for depth " + std::to_string(depth));

  // Base-m digits, most significant first.
  std::vector<int> digits(depth, 0);
  Int rest = numerator;
  for (std::size_t i = depth; i-- > 0;) {
    digits[i] = static_cast<int>(mpz_fdiv_ui(rest.get_mpz_t(),
                                             static_cast<unsigned long>(params_.base)));
    rest = floor_div(rest, Int(params_.base));
  }

  Address addr;
  addr.word.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::vector<int> retained = retained_indices(i + 1);
    auto it = std::find(retained.begin(), retained.end(), digits[i]);
    if (it == retained.end())
      throw NotAMember("digit " + std::to_string(digits[i]) +
                       " at level " + std::to_string(i + 1) +
                       " is not a retained index");
    addr.word.push_back(static_cast<int>(it - retained.begin()));
  }
  return addr;
}

namespace {

// Checks one explicit expansion prefix against the retained indices.
bool prefix_retained(const Construction& con, const std::vector<int>& digits,
                     std::size_t depth) {
  for (std::size_t i = 0; i < depth; ++i) {
    const std::vector<int> retained = con.retained_indices(i + 1);
    if (std::find(retained.begin(), retained.end(), digits[i]) == retained.end())
      return false;
  }
  return true;
}

}  // namespace

MemberVerdict Construction::member_prefix(const DigitExpansion& x,
                                          std::size_t depth) const {
  if (x.base != params_.base)
    throw InvalidParams("expansion base does not match construction base");
  for (int d : x.digits)
    if (d < 0 || d >= params_.base)
      throw InvalidParams("digit " + std::to_string(d) + " out of range");
  if (!x.terminating && x.digits.size() < depth)
    throw InvalidParams("non-terminating expansion needs at least " +
                        std::to_string(depth) + " digits");

  std::vector<int> primary(x.digits.begin(), x.digits.end());
  if (primary.size() < depth) primary.resize(depth, 0);
  if (prefix_retained(*this, primary, depth))
    return {true, {primary.begin(), primary.begin() + static_cast<long>(depth)}};

  if (x.terminating) {
    // The value also has the expansion that decrements the last nonzero
    // digit and continues with (m-1)s; zero has no such twin.
    auto last_nz = std::find_if(primary.rbegin(), primary.rend(),
                                [](int d) { return d != 0; });
    if (last_nz != primary.rend()) {
      std::vector<int> alt(primary.begin(), last_nz.base());
      alt.back() -= 1;
      alt.resize(depth > alt.size() ? depth : alt.size(), params_.base - 1);
      if (prefix_retained(*this, alt, depth))
        return {true, {alt.begin(), alt.begin() + static_cast<long>(depth)}};
    }
  }
  return {false, {}};
}

MemberVerdict Construction::member_value(const Rational& x,
                                         std::size_t depth) const {
  if (x < 0 || x > 1) throw InvalidParams("value must lie in [0,1]");

  // Numerators of the at most two depth-i intervals containing x, level by
  // level; each must refine a survivor from the level above.
  std::vector<Int> survivors = {Int(0)};
  for (std::size_t i = 1; i <= depth; ++i) {
    const Rational v = x * ipow(static_cast<unsigned long>(params_.base),
                                static_cast<unsigned long>(i));
    const Int f = floor_rational(v);
    std::vector<Int> candidates;
    if (v == Rational(f)) {
      if (f >= 1) candidates.push_back(f - 1);  // x is a shared endpoint
      if (Rational(f) < ipow(static_cast<unsigned long>(params_.base),
                             static_cast<unsigned long>(i)))
        candidates.push_back(f);
    } else {
      candidates.push_back(f);
    }

    const std::vector<int> retained = retained_indices(i);
    std::vector<Int> next;
    for (const Int& c : candidates) {
      const int digit = static_cast<int>(
          mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(params_.base)));
      if (std::find(retained.begin(), retained.end(), digit) == retained.end())
        continue;
      const Int parent = floor_div(c, Int(params_.base));
      if (std::find(survivors.begin(), survivors.end(), parent) != survivors.end())
        next.push_back(c);
    }
    if (next.empty()) return {false, {}};
    survivors = std::move(next);
  }

  // Digits of the smallest surviving numerator form the witness.
  std::vector<int> witness(depth, 0);
  Int rest = survivors.front();
  for (std::size_t i = depth; i-- > 0;) {
    witness[i] = static_cast<int>(
        mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(params_.base)));
    rest = floor_div(rest, Int(params_.base));
  }
  return {true, witness};
}

Rational Construction::min_sibling_gap(std::size_t level) const {
  if (params_.branch < 2)
    throw InvalidParams("sibling gaps need at least two retained children");
  std::vector<int> retained = retained_indices(level);
  std::sort(retained.begin(), retained.end());
  int min_units = params_.base;  // distance in m^-level units between closures
  for (std::size_t j = 1; j < retained.size(); ++j)
    min_units = std::min(min_units, retained[j] - retained[j - 1] - 1);
  Rational out(Int(min_units), ipow(static_cast<unsigned long>(params_.base),
                                    static_cast<unsigned long>(level)));
  out.canonicalize();
  return out;
}

}  // namespace primefractal
