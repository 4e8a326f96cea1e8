// main.cpp - command-line surface for the level-set library.
//
// Exit codes: 0 success, 2 invalid parameters, 3 interval budget or sieve
// cap exceeded, 4 I/O failure, 5 malformed textual input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "primefractal/construction.hpp"
#include "primefractal/dimension.hpp"
#include "primefractal/measure.hpp"
#include "primefractal/serialize.hpp"
#include "primefractal/stats.hpp"

namespace pf = primefractal;

namespace {

struct CommonOpts {
  int base = 16;
  int branch = 2;
  std::string source = "primes";
  std::uint64_t max_intervals = pf::kDefaultMaxIntervals;
  std::uint64_t sieve_cap = pf::kDefaultSieveCap;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--base", opts.base, "Subintervals per split (m)")
      ->capture_default_str();
  cmd->add_option("--branch", opts.branch, "Subintervals kept per split (k)")
      ->capture_default_str();
  cmd->add_option("--source", opts.source,
                  "Symbol source: primes | constant:<v> | list:<path> | seeded:<seed>")
      ->capture_default_str();
  cmd->add_option("--max-intervals", opts.max_intervals,
                  "Interval budget per level set")
      ->capture_default_str();
  cmd->add_option("--sieve-cap", opts.sieve_cap, "Prime magnitude cap")
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Output path (stdout when omitted)");
  cmd->add_option("--format", opts.format, "Output format: json | csv")
      ->capture_default_str();
}

// "list:<path>" files hold one integer per line; entries must already lie
// in {0..base-1} (never clamped).
pf::SourceSpec resolve_source(const CommonOpts& opts) {
  if (opts.source.rfind("list:", 0) == 0) {
    const std::string path = opts.source.substr(5);
    std::ifstream in(path);
    if (!in) throw pf::IoError("cannot read symbol list '" + path + "'");
    std::vector<int> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(line, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != line.size())
        throw pf::InvalidParams("symbol list '" + path + "' line " +
                                std::to_string(lineno) + " is not an integer");
      if (v < 0 || v >= opts.base)
        throw pf::InvalidParams("symbol list '" + path + "' line " +
                                std::to_string(lineno) + " is outside 0.." +
                                std::to_string(opts.base - 1));
      values.push_back(v);
    }
    return pf::SourceSpec::explicit_list(std::move(values));
  }
  return pf::SourceSpec::parse(opts.source);
}

pf::ConstructionParams make_params(const CommonOpts& opts) {
  pf::ConstructionParams params;
  params.base = opts.base;
  params.branch = opts.branch;
  params.source = resolve_source(opts);
  params.max_intervals = opts.max_intervals;
  params.sieve_cap = opts.sieve_cap;
  params.validate();
  return params;
}

void require_json_format(const CommonOpts& opts) {
  if (opts.format != "json")
    throw pf::InvalidParams("this command only writes json output");
}

void emit(const CommonOpts& opts, const std::string& document,
          const std::string& summary) {
  if (opts.out.empty()) {
    std::cout << document;
  } else {
    pf::write_file_atomic(opts.out, document);
    std::cout << summary;
  }
}

int cmd_build(const CommonOpts& opts, std::size_t depth) {
  require_json_format(opts);
  const pf::Construction con(make_params(opts));
  const pf::LevelSet ls = con.build(depth);
  if (!opts.out.empty()) pf::write_file_atomic(opts.out, pf::level_set_to_json(ls));
  std::cout << "intervals=" << ls.numerators.size()
            << " lebesgue=" << pf::rational_str(ls.lebesgue_measure()) << "\n";
  return 0;
}

int cmd_dimension(const CommonOpts& opts, std::size_t depth,
                  const std::string& series_out, const std::string& report_out) {
  const pf::Construction con(make_params(opts));
  const pf::BoxCountSeries series = pf::exact_box_counts(con, depth);
  const pf::DimensionReport report = pf::estimate_dimension(series);

  if (!series_out.empty()) pf::write_file_atomic(series_out, pf::box_series_csv(series));
  if (!report_out.empty())
    pf::write_file_atomic(report_out, pf::dimension_report_json(report, con.params()));
  if (!opts.out.empty()) {
    if (opts.format == "csv")
      pf::write_file_atomic(opts.out, pf::box_series_csv(series));
    else
      pf::write_file_atomic(opts.out, pf::dimension_report_json(report, con.params()));
  }

  std::cout << "slope=" << report.estimated_slope
            << " theoretical=" << report.theoretical
            << " residual=" << report.residual << "\n";
  return 0;
}

int cmd_measure(const CommonOpts& opts, std::size_t depth,
                const std::vector<std::string>& interval,
                std::size_t decay_trials, std::uint64_t seed) {
  require_json_format(opts);
  const pf::Construction con(make_params(opts));

  if (decay_trials > 0) {
    const pf::DecayReport report = pf::decay_check(con, depth, decay_trials, seed);
    emit(opts, pf::decay_report_json(report),
         std::string("bound_satisfied=") + (report.bound_satisfied ? "true" : "false") +
             "\n");
    return 0;
  }

  const pf::QueryInterval J(pf::parse_rational(interval.at(0)),
                            pf::parse_rational(interval.at(1)));
  const pf::MeasureBracket bracket = pf::measure_bracket(con, J, depth);
  emit(opts, pf::bracket_json(bracket, J),
       "lower=" + pf::rational_str(bracket.lower) +
           " upper=" + pf::rational_str(bracket.upper) + "\n");
  return 0;
}

int cmd_stats(const CommonOpts& opts, int modulus, std::size_t count,
              const std::string& histogram_out, const std::string& summary_out) {
  const pf::ResidueHistogram h = pf::residue_histogram(modulus, count, opts.sieve_cap);
  const pf::EquidistributionReport report = pf::equidistribution_report(h);

  if (!histogram_out.empty())
    pf::write_file_atomic(histogram_out, pf::histogram_csv(report));
  if (!summary_out.empty())
    pf::write_file_atomic(summary_out, pf::equidistribution_json(report));
  if (!opts.out.empty()) {
    if (opts.format == "csv")
      pf::write_file_atomic(opts.out, pf::histogram_csv(report));
    else
      pf::write_file_atomic(opts.out, pf::equidistribution_json(report));
  }

  std::cout << "max_deviation=" << report.max_deviation
            << " chi_square=" << report.chi_square << "\n";
  return 0;
}

// Digit strings are whitespace-separated base-m digits, e.g. "2 3".
std::vector<int> parse_digits(const std::string& text, int base) {
  std::istringstream in(text);
  std::vector<int> digits;
  std::string token;
  while (in >> token) {
    std::size_t pos = 0;
    int d = 0;
    try {
      d = std::stoi(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != token.size() || d < 0 || d >= base)
      throw pf::MalformedInput("digit '" + token + "' is not in 0.." +
                               std::to_string(base - 1));
    digits.push_back(d);
  }
  return digits;
}

int cmd_member(const CommonOpts& opts, std::size_t depth,
               const std::optional<std::string>& digits,
               const std::optional<std::string>& value, bool nonterminating) {
  require_json_format(opts);
  const pf::Construction con(make_params(opts));

  pf::MemberVerdict verdict;
  if (digits) {
    pf::DigitExpansion x;
    x.base = opts.base;
    x.digits = parse_digits(*digits, opts.base);
    x.terminating = !nonterminating;
    verdict = con.member_prefix(x, depth);
  } else {
    const pf::Rational x = pf::parse_rational(*value);
    verdict = con.member_value(x, depth);
  }

  emit(opts, pf::member_json(verdict, depth),
       std::string("member=") + (verdict.member ? "true" : "false") + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact level sets of the keep-k-of-m interval construction"};
  app.require_subcommand(1);

  CommonOpts build_opts, dim_opts, measure_opts, stats_opts, member_opts;
  std::size_t depth = 0;

  auto* build = app.add_subcommand("build", "Build a level set and export it");
  add_common(build, build_opts);
  build->add_option("--depth", depth, "Construction depth")->required();

  std::size_t dim_depth = 10;
  std::string series_out, report_out;
  auto* dimension =
      app.add_subcommand("dimension", "Exact box counts and log-log slope");
  add_common(dimension, dim_opts);
  dimension->add_option("--depth", dim_depth, "Deepest scale exponent")
      ->capture_default_str();
  dimension->add_option("--series-out", series_out, "Box-count series CSV path");
  dimension->add_option("--report-out", report_out, "Dimension report JSON path");

  std::size_t measure_depth = 4;
  std::vector<std::string> interval{"0/1", "1/1"};
  std::size_t decay_trials = 0;
  std::uint64_t seed = 0;
  auto* measure =
      app.add_subcommand("measure", "Mass brackets and the decay bound");
  add_common(measure, measure_opts);
  measure->add_option("--depth", measure_depth, "Bracketing depth")
      ->capture_default_str();
  measure->add_option("--interval", interval, "Query interval: LO HI rationals")
      ->expected(2);
  measure->add_option("--decay-trials", decay_trials,
                      "Run the decay check with this many random intervals");
  measure->add_option("--seed", seed, "Seed for the decay check")
      ->capture_default_str();

  int modulus = 16;
  std::size_t count = 0;
  std::string histogram_out, summary_out;
  auto* stats =
      app.add_subcommand("stats", "Prime residue histograms and equidistribution");
  add_common(stats, stats_opts);
  stats->add_option("--modulus", modulus, "Residue modulus")->capture_default_str();
  stats->add_option("--count", count, "Number of primes to sample")->required();
  stats->add_option("--histogram-out", histogram_out, "Histogram CSV path");
  stats->add_option("--summary-out", summary_out, "Summary JSON path");

  std::size_t member_depth = 1;
  std::optional<std::string> digits, value;
  bool nonterminating = false;
  auto* member = app.add_subcommand("member", "Membership at finite depth");
  add_common(member, member_opts);
  member->add_option("--depth", member_depth, "Membership depth")
      ->capture_default_str();
  auto* digits_opt =
      member->add_option("--digits", digits, "Whitespace-separated base-m digits");
  member->add_option("--value", value, "Exact rational in [0,1]")
      ->excludes(digits_opt);
  member->add_flag("--nonterminating", nonterminating,
                   "Digits are a prefix of a non-terminating expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(build_opts, depth);
    if (dimension->parsed())
      return cmd_dimension(dim_opts, dim_depth, series_out, report_out);
    if (measure->parsed())
      return cmd_measure(measure_opts, measure_depth, interval, decay_trials, seed);
    if (stats->parsed())
      return cmd_stats(stats_opts, modulus, count, histogram_out, summary_out);
    if (member->parsed()) {
      if (!digits && !value)
        throw pf::InvalidParams("member needs --digits or --value");
      return cmd_member(member_opts, member_depth, digits, value, nonterminating);
    }
  } catch (const pf::MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const pf::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pf::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pf::SieveCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
