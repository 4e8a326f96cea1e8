// serialize.cpp - JSON/CSV emitters, parsers, and atomic file output.

#include "primefractal/serialize.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "json.hpp"

namespace primefractal {

using ordered_json = nlohmann::ordered_json;

namespace {

bool is_decimal(const std::string& text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

std::string float_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string interval_pair_str(const Rational& x) { return rational_str(x); }

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!is_decimal(num, true))
    throw MalformedInput("malformed rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // GMP rejects an explicit plus
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!is_decimal(den, false) || Int(den) == 0)
      throw MalformedInput("malformed rational: '" + text + "'");
    return make_rational(Int(num), Int(den));
  }
  return make_rational(Int(num), Int(1));
}

std::string level_set_to_json(const LevelSet& ls) {
  ordered_json doc;
  doc["base"] = ls.params.base;
  doc["branch"] = ls.params.branch;
  doc["depth"] = ls.depth;
  doc["source"] = ls.params.source.descriptor();
  ordered_json nums = ordered_json::array();
  for (const Int& c : ls.numerators) nums.push_back(c.get_str());
  doc["numerators"] = std::move(nums);
  return doc.dump(2) + "\n";
}

LevelSet level_set_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw MalformedInput(std::string("level-set JSON does not parse: ") + e.what());
  }

  LevelSet ls;
  try {
    ls.params.base = doc.at("base").get<int>();
    ls.params.branch = doc.at("branch").get<int>();
    ls.depth = doc.at("depth").get<std::size_t>();
    ls.params.source = SourceSpec::parse(doc.at("source").get<std::string>());
    for (const auto& entry : doc.at("numerators")) {
      const auto str = entry.get<std::string>();
      if (!is_decimal(str, false))
        throw MalformedInput("numerator '" + str + "' is not a decimal string");
      ls.numerators.emplace_back(str);
    }
  } catch (const ordered_json::exception& e) {
    throw MalformedInput(std::string("level-set JSON malformed: ") + e.what());
  } catch (const InvalidParams& e) {
    throw MalformedInput(std::string("level-set JSON malformed: ") + e.what());
  }

  try {
    ls.params.validate();
  } catch (const InvalidParams& e) {
    throw MalformedInput(std::string("level-set JSON malformed: ") + e.what());
  }

  const Int bound = ipow(static_cast<unsigned long>(ls.params.base),
                         static_cast<unsigned long>(ls.depth));
  const Int expected = ipow(static_cast<unsigned long>(ls.params.branch),
                            static_cast<unsigned long>(ls.depth));
  if (Int(static_cast<unsigned long>(ls.numerators.size())) != expected)
    throw MalformedInput("level-set JSON holds " +
                         std::to_string(ls.numerators.size()) +
                         " numerators; depth demands " + expected.get_str());
  for (std::size_t i = 0; i < ls.numerators.size(); ++i) {
    if (ls.numerators[i] < 0 || ls.numerators[i] >= bound)
      throw MalformedInput("numerator " + ls.numerators[i].get_str() +
                           " out of range");
    if (i > 0 && !(ls.numerators[i - 1] < ls.numerators[i]))
      throw MalformedInput("numerators are not strictly increasing");
  }
  return ls;
}

std::string bracket_json(const MeasureBracket& bracket, const QueryInterval& J) {
  ordered_json doc;
  doc["depth"] = bracket.depth;
  doc["interval"] = {interval_pair_str(J.lo), interval_pair_str(J.hi)};
  doc["lower"] = rational_str(bracket.lower);
  doc["upper"] = rational_str(bracket.upper);
  return doc.dump(2) + "\n";
}

std::string decay_report_json(const DecayReport& report) {
  ordered_json doc;
  doc["depth"] = report.depth;
  doc["trials"] = report.trials;
  doc["max_ratio_4th_power"] = rational_str(report.max_ratio_4th_power);
  doc["worst_interval"] = {interval_pair_str(report.worst_interval.lo),
                           interval_pair_str(report.worst_interval.hi)};
  doc["bound_satisfied"] = report.bound_satisfied;
  return doc.dump(2) + "\n";
}

std::string dimension_report_json(const DimensionReport& report,
                                  const ConstructionParams& params) {
  ordered_json doc;
  doc["base"] = params.base;
  doc["branch"] = params.branch;
  doc["source"] = params.source.descriptor();
  doc["estimated_slope"] = report.estimated_slope;
  doc["theoretical"] = report.theoretical;
  doc["residual"] = report.residual;
  return doc.dump(2) + "\n";
}

std::string box_series_csv(const BoxCountSeries& series) {
  const double log_m = std::log(static_cast<double>(series.params.base));
  std::string out = "n,scale,count,log_ratio\n";
  for (const auto& [n, count] : series.entries) {
    out += std::to_string(n);
    out += ",1/" + ipow(static_cast<unsigned long>(series.params.base),
                        static_cast<unsigned long>(n)).get_str();
    out += "," + count.get_str();
    out += ",";
    if (n > 0) out += float_str(log_int(count) / (static_cast<double>(n) * log_m));
    out += "\n";
  }
  return out;
}

std::string histogram_csv(const EquidistributionReport& report) {
  const double expected = 1.0 / static_cast<double>(report.phi);
  std::string out = "residue,count,frequency,expected,deviation\n";
  for (const ClassStat& stat : report.classes) {
    out += std::to_string(stat.residue);
    out += "," + std::to_string(stat.count);
    out += "," + float_str(stat.frequency);
    out += ",";
    if (stat.coprime) out += float_str(expected);
    out += ",";
    if (stat.coprime) out += float_str(stat.deviation);
    out += "\n";
  }
  return out;
}

std::string equidistribution_json(const EquidistributionReport& report) {
  ordered_json doc;
  doc["modulus"] = report.modulus;
  doc["sample_count"] = report.sample_count;
  doc["coprime_sample_count"] = report.coprime_sample_count;
  doc["phi"] = report.phi;
  doc["max_deviation"] = report.max_deviation;
  doc["chi_square"] = report.chi_square;
  ordered_json classes = ordered_json::array();
  for (const ClassStat& stat : report.classes) {
    ordered_json entry;
    entry["residue"] = stat.residue;
    entry["count"] = stat.count;
    entry["frequency"] = stat.frequency;
    entry["coprime"] = stat.coprime;
    if (stat.coprime) entry["deviation"] = stat.deviation;
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

std::string member_json(const MemberVerdict& verdict, std::size_t depth) {
  ordered_json doc;
  doc["depth"] = depth;
  doc["member"] = verdict.member;
  doc["witness"] = verdict.witness;
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace primefractal
