#include <algorithm>
#include <vector>

#include "doctest.h"
#include "primefractal/construction.hpp"

namespace pf = primefractal;

namespace {

pf::ConstructionParams params16() {
  pf::ConstructionParams p;  // defaults: base 16, branch 2, primes
  return p;
}

pf::ConstructionParams make(int base, int branch, pf::SourceSpec source) {
  pf::ConstructionParams p;
  p.base = base;
  p.branch = branch;
  p.source = std::move(source);
  return p;
}

// Oracle: keep c in 0..m^n-1 iff every base-m digit of c is retained at its
// level. Independent of expand(): scans the whole range.
std::vector<pf::Int> digit_filter_enumeration(const pf::Construction& con,
                                              std::size_t depth) {
  const int m = con.params().base;
  std::vector<std::vector<int>> retained;
  for (std::size_t i = 1; i <= depth; ++i) retained.push_back(con.retained_indices(i));

  std::vector<pf::Int> out;
  const pf::Int bound = pf::ipow(static_cast<unsigned long>(m),
                                 static_cast<unsigned long>(depth));
  for (pf::Int c = 0; c < bound; ++c) {
    pf::Int rest = c;
    bool ok = true;
    for (std::size_t i = depth; i-- > 0;) {
      const int digit = static_cast<int>(
          mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(m)));
      rest = pf::floor_div(rest, pf::Int(m));
      if (std::find(retained[i].begin(), retained[i].end(), digit) ==
          retained[i].end()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(pf::Construction(make(1, 1, pf::SourceSpec::primes())),
                  pf::InvalidParams);
  CHECK_THROWS_AS(pf::Construction(make(16, 0, pf::SourceSpec::primes())),
                  pf::InvalidParams);
  CHECK_THROWS_AS(pf::Construction(make(16, 16, pf::SourceSpec::primes())),
                  pf::InvalidParams);
  CHECK_THROWS_AS(pf::Construction(make(16, 17, pf::SourceSpec::primes())),
                  pf::InvalidParams);
}

TEST_CASE("retained indices for the prime-driven base-16 construction") {
  pf::Construction con(params16());
  CHECK(con.retained_indices(1) == std::vector<int>{2, 10});
  CHECK(con.retained_indices(2) == std::vector<int>{3, 11});
  CHECK(con.retained_indices(3) == std::vector<int>{5, 13});
  CHECK(con.retained_indices(7) == std::vector<int>{1, 9});
  CHECK_THROWS_AS(con.retained_indices(0), pf::InvalidParams);
}

TEST_CASE("retained indices wrap modulo the base") {
  pf::Construction con(make(3, 2, pf::SourceSpec::constant_value(2)));
  CHECK(con.retained_indices(1) == std::vector<int>{2, 0});
}

TEST_CASE("single-branch constructions keep one index") {
  pf::Construction con(make(16, 1, pf::SourceSpec::constant_value(5)));
  CHECK(con.retained_indices(3) == std::vector<int>{5});
}

TEST_CASE("retained indices are always distinct") {
  for (int m = 2; m <= 8; ++m)
    for (int k = 1; k < m; ++k) {
      pf::Construction con(make(m, k, pf::SourceSpec::seeded(99)));
      for (std::size_t level = 1; level <= 6; ++level) {
        auto r = con.retained_indices(level);
        std::sort(r.begin(), r.end());
        CHECK(std::adjacent_find(r.begin(), r.end()) == r.end());
      }
    }
}

TEST_CASE("frozen level sets of the prime-driven construction") {
  pf::Construction con(params16());

  const pf::LevelSet f0 = con.build(0);
  CHECK(f0.depth == 0);
  CHECK(f0.numerators == std::vector<pf::Int>{0});
  CHECK(f0.lebesgue_measure() == pf::Rational(1));

  const pf::LevelSet f1 = con.build(1);
  CHECK(f1.numerators == std::vector<pf::Int>{2, 10});

  const pf::LevelSet f2 = con.build(2);
  CHECK(f2.numerators == std::vector<pf::Int>{35, 43, 163, 171});
  CHECK(f2.interval_length() == pf::make_rational(1, 256));

  const pf::LevelSet f3 = con.build(3);
  CHECK(f3.numerators.size() == 8);
  CHECK(f3.interval_length() == pf::make_rational(1, 4096));
}

TEST_CASE("frozen level set for (3,2) with constant symbol 0") {
  pf::Construction con(make(3, 2, pf::SourceSpec::constant_value(0)));
  CHECK(con.build(2).numerators == std::vector<pf::Int>{0, 1, 3, 4});
}

TEST_CASE("expand preserves sorting and multiplies the count by k") {
  pf::Construction con(make(5, 3, pf::SourceSpec::seeded(7)));
  pf::LevelSet ls = con.build(0);
  for (std::size_t n = 1; n <= 6; ++n) {
    ls = con.expand(ls);
    CHECK(ls.depth == n);
    CHECK(ls.numerators.size() == pf::ipow(3, static_cast<unsigned long>(n)));
    CHECK(std::is_sorted(ls.numerators.begin(), ls.numerators.end()));
    CHECK(std::adjacent_find(ls.numerators.begin(), ls.numerators.end()) ==
          ls.numerators.end());
    CHECK(ls.numerators.front() >= 0);
    CHECK(ls.numerators.back() <
          pf::ipow(5, static_cast<unsigned long>(n)));
  }
}

TEST_CASE("expand rejects level sets from other parameter sets") {
  pf::Construction a(params16());
  pf::Construction b(make(3, 2, pf::SourceSpec::constant_value(0)));
  CHECK_THROWS_AS(a.expand(b.build(1)), pf::InvalidParams);
}

TEST_CASE("build equals exhaustive digit-filter enumeration") {
  const std::vector<pf::ConstructionParams> cases = {
      make(3, 2, pf::SourceSpec::constant_value(0)),
      make(5, 3, pf::SourceSpec::seeded(42)),
      make(8, 5, pf::SourceSpec::primes()),
      make(6, 2, pf::SourceSpec::explicit_list({1, 4, 0, 3})),
      make(7, 6, pf::SourceSpec::seeded(1)),
      make(4, 2, pf::SourceSpec::primes()),
  };
  for (const auto& params : cases) {
    pf::Construction con(params);
    for (std::size_t depth = 0; depth <= 4; ++depth)
      CHECK(con.build(depth).numerators == digit_filter_enumeration(con, depth));
  }
}

TEST_CASE("nesting: every child refines exactly one parent") {
  pf::Construction con(params16());
  pf::LevelSet parents = con.build(0);
  for (std::size_t n = 1; n <= 8; ++n) {
    const pf::LevelSet children = con.expand(parents);
    for (const pf::Int& c : children.numerators) {
      const pf::Int parent = pf::floor_div(c, pf::Int(16));
      CHECK(std::binary_search(parents.numerators.begin(),
                               parents.numerators.end(), parent));
    }
    parents = children;
  }
}

TEST_CASE("lebesgue measure is exactly (k/m)^n") {
  pf::Construction con(params16());
  for (std::size_t n = 0; n <= 12; ++n) {
    const pf::LevelSet ls = con.build(n);
    CHECK(ls.lebesgue_measure() ==
          pf::make_rational(1, pf::ipow(8, static_cast<unsigned long>(n))));
  }
  pf::Construction tri(make(3, 2, pf::SourceSpec::seeded(3)));
  CHECK(tri.build(5).lebesgue_measure() == pf::make_rational(32, 243));
}

TEST_CASE("interval budget is enforced") {
  pf::ConstructionParams p = params16();
  p.max_intervals = 8;
  pf::Construction con(p);
  CHECK(con.build(3).numerators.size() == 8);
  CHECK_THROWS_AS(con.build(4), pf::BudgetExceeded);
  CHECK_THROWS_AS(con.expand(con.build(3)), pf::BudgetExceeded);
}

TEST_CASE("explicit lists exhaust") {
  pf::Construction con(make(16, 2, pf::SourceSpec::explicit_list({2, 3})));
  CHECK(con.build(2).numerators == std::vector<pf::Int>{35, 43, 163, 171});
  CHECK_THROWS_AS(con.build(3), pf::SourceExhausted);
}

TEST_CASE("address round trips") {
  pf::Construction con(params16());

  CHECK(con.address_to_numerator(pf::Address{{0, 1}}) == 43);
  CHECK(con.address_to_numerator(pf::Address{{}}) == 0);
  CHECK(con.numerator_to_address(43, 2).word == std::vector<int>{0, 1});
  CHECK(con.numerator_to_address(0, 0).word.empty());

  // Exhaustive round trip over every word at depth <= 6.
  for (std::size_t depth = 0; depth <= 6; ++depth) {
    const pf::LevelSet ls = con.build(depth);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << depth); ++w) {
      pf::Address addr;
      for (std::size_t i = 0; i < depth; ++i)
        addr.word.push_back(static_cast<int>((w >> (depth - 1 - i)) & 1));
      const pf::Int c = con.address_to_numerator(addr);
      CHECK(std::binary_search(ls.numerators.begin(), ls.numerators.end(), c));
      CHECK(con.numerator_to_address(c, depth).word == addr.word);
    }
  }
}

TEST_CASE("address errors") {
  pf::Construction con(params16());
  CHECK_THROWS_AS(con.address_to_numerator(pf::Address{{0, 2}}), pf::InvalidParams);
  CHECK_THROWS_AS(con.numerator_to_address(44, 2), pf::NotAMember);
  CHECK_THROWS_AS(con.numerator_to_address(256, 2), pf::InvalidParams);
  CHECK_THROWS_AS(con.numerator_to_address(-1, 2), pf::InvalidParams);
}

TEST_CASE("membership by digit prefix") {
  pf::Construction con(params16());

  pf::DigitExpansion x;
  x.digits = {2, 3};
  CHECK(con.member_prefix(x, 2).member);
  CHECK(con.member_prefix(x, 2).witness == std::vector<int>{2, 3});

  x.digits = {0};
  CHECK_FALSE(con.member_prefix(x, 1).member);

  // 3/16 is the right endpoint of [2/16, 3/16]: member via the alternate
  // expansion 2,15,15,...
  x.digits = {3};
  const pf::MemberVerdict v = con.member_prefix(x, 1);
  CHECK(v.member);
  CHECK(v.witness == std::vector<int>{2});
  CHECK_FALSE(con.member_prefix(x, 2).member);  // 15 not retained at level 2

  // The same digits as a non-terminating prefix pin the expansion.
  x.terminating = false;
  CHECK_FALSE(con.member_prefix(x, 1).member);
  CHECK_THROWS_AS(con.member_prefix(x, 2), pf::InvalidParams);  // digits missing

  pf::DigitExpansion bad;
  bad.digits = {16};
  CHECK_THROWS_AS(con.member_prefix(bad, 1), pf::InvalidParams);
  pf::DigitExpansion wrong_base;
  wrong_base.base = 10;
  wrong_base.digits = {2};
  CHECK_THROWS_AS(con.member_prefix(wrong_base, 1), pf::InvalidParams);
}

TEST_CASE("membership by exact value") {
  pf::Construction con(params16());

  CHECK_FALSE(con.member_value(pf::Rational(0), 1).member);
  CHECK_FALSE(con.member_value(pf::Rational(1), 1).member);
  CHECK(con.member_value(pf::make_rational(3, 16), 1).member);
  CHECK(con.member_value(pf::make_rational(3, 16), 1).witness == std::vector<int>{2});
  CHECK(con.member_value(pf::make_rational(35, 256), 2).member);
  CHECK(con.member_value(pf::make_rational(71, 512), 2).member);  // inside [35,36]/256
  CHECK_FALSE(con.member_value(pf::make_rational(1, 2), 3).member);
  CHECK_THROWS_AS(con.member_value(pf::Rational(2), 1), pf::InvalidParams);
}

TEST_CASE("value membership agrees with exact interval containment") {
  // Exhaustive cross-check: every terminating expansion with <= 4 digits.
  const std::vector<pf::ConstructionParams> cases = {
      make(3, 2, pf::SourceSpec::constant_value(0)),
      make(5, 3, pf::SourceSpec::seeded(42)),
      make(8, 5, pf::SourceSpec::primes()),
  };
  for (const auto& params : cases) {
    pf::Construction con(params);
    const int m = params.base;
    for (std::size_t depth = 1; depth <= 4; ++depth) {
      const pf::LevelSet ls = con.build(depth);
      const pf::Int scale = pf::ipow(static_cast<unsigned long>(m),
                                     static_cast<unsigned long>(depth));
      const pf::Int values = pf::ipow(static_cast<unsigned long>(m), 4);
      for (pf::Int t = 0; t <= values; ++t) {
        const pf::Rational x = pf::make_rational(t, values);
        bool contained = false;
        for (const pf::Int& c : ls.numerators)
          if (pf::make_rational(c, scale) <= x &&
              x <= pf::make_rational(c + 1, scale)) {
            contained = true;
            break;
          }
        CHECK(con.member_value(x, depth).member == contained);
      }
    }
  }
}

TEST_CASE("digit membership agrees with value membership") {
  pf::Construction con(make(5, 3, pf::SourceSpec::seeded(42)));
  for (std::size_t len = 1; len <= 4; ++len) {
    const pf::Int bound = pf::ipow(5, static_cast<unsigned long>(len));
    for (pf::Int t = 0; t < bound; ++t) {
      pf::DigitExpansion x;
      x.base = 5;
      pf::Int rest = t;
      x.digits.assign(len, 0);
      for (std::size_t i = len; i-- > 0;) {
        x.digits[i] = static_cast<int>(mpz_fdiv_ui(rest.get_mpz_t(), 5));
        rest = pf::floor_div(rest, pf::Int(5));
      }
      const pf::Rational value = pf::make_rational(t, bound);
      for (std::size_t depth = 1; depth <= len; ++depth)
        CHECK(con.member_prefix(x, depth).member ==
              con.member_value(value, depth).member);
    }
  }
}

TEST_CASE("minimum sibling gap of the prime-driven construction") {
  pf::Construction con(params16());
  for (std::size_t n = 1; n <= 12; ++n) {
    const pf::Rational gap = con.min_sibling_gap(n);
    const pf::Rational scale =
        pf::inv_power(16, static_cast<unsigned long>(n));
    CHECK(gap == 7 * scale);
    CHECK(gap >= 6 * scale);
  }
}

TEST_CASE("sibling gaps in the general construction") {
  pf::Construction adjacent(make(3, 2, pf::SourceSpec::constant_value(0)));
  CHECK(adjacent.min_sibling_gap(1) == 0);

  pf::Construction single(make(16, 1, pf::SourceSpec::constant_value(5)));
  CHECK_THROWS_AS(single.min_sibling_gap(1), pf::InvalidParams);
}

TEST_CASE("construction is deterministic") {
  pf::Construction a(params16()), b(params16());
  CHECK(a.build(6).numerators == b.build(6).numerators);

  pf::Construction s1(make(12, 5, pf::SourceSpec::seeded(2024)));
  pf::Construction s2(make(12, 5, pf::SourceSpec::seeded(2024)));
  CHECK(s1.build(5).numerators == s2.build(5).numerators);
  CHECK(s1.retained_indices(9) == s2.retained_indices(9));
}
