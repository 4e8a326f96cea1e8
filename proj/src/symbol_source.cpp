// symbol_source.cpp

#include "primefractal/symbol_source.hpp"

#include <charconv>
#include <stdexcept>

#include "primefractal/rng.hpp"

namespace primefractal {

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidParams("invalid " + what + ": '" + text + "'");
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidParams("invalid " + what + ": '" + text + "'");
  return out;
}

}  // namespace

SourceSpec SourceSpec::primes() { return SourceSpec{}; }

SourceSpec SourceSpec::constant_value(int v) {
  SourceSpec s;
  s.kind = Kind::Constant;
  s.constant = v;
  return s;
}

SourceSpec SourceSpec::explicit_list(std::vector<int> v) {
  SourceSpec s;
  s.kind = Kind::List;
  s.values = std::move(v);
  return s;
}

SourceSpec SourceSpec::seeded(std::uint64_t seed) {
  SourceSpec s;
  s.kind = Kind::Seeded;
  s.seed = seed;
  return s;
}

SourceSpec SourceSpec::parse(const std::string& descriptor) {
  if (descriptor == "primes") return primes();
  if (descriptor.rfind("constant:", 0) == 0)
    return constant_value(parse_int(descriptor.substr(9), "constant source value"));
  if (descriptor.rfind("seeded:", 0) == 0)
    return seeded(parse_u64(descriptor.substr(7), "source seed"));
  if (descriptor.rfind("list:", 0) == 0) {
    std::vector<int> values;
    std::string rest = descriptor.substr(5);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      values.push_back(parse_int(rest.substr(pos, comma - pos), "list source entry"));
      pos = comma + 1;
    }
    return explicit_list(std::move(values));
  }
  throw InvalidParams("unknown source descriptor: '" + descriptor + "'");
}

std::string SourceSpec::descriptor() const {
  switch (kind) {
    case Kind::Primes:
      return "primes";
    case Kind::Constant:
      return "constant:" + std::to_string(constant);
    case Kind::List: {
      std::string out = "list:";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
      }
      return out;
    }
    case Kind::Seeded:
      return "seeded:" + std::to_string(seed);
  }
  throw std::logic_error("unreachable");
}

SymbolSequence::SymbolSequence(SourceSpec spec, int base, std::uint64_t sieve_cap)
    : spec_(std::move(spec)), base_(base) {
  if (base_ < 2) throw InvalidParams("base must be at least 2");
  if (spec_.kind == SourceSpec::Kind::Primes)
    residues_.emplace(base_, sieve_cap);
}

int SymbolSequence::at(std::size_t level) {
  if (level == 0) throw InvalidParams("symbol levels are 1-based");
  switch (spec_.kind) {
    case SourceSpec::Kind::Primes:
      return residues_->value(level);
    case SourceSpec::Kind::Constant: {
      int v = spec_.constant % base_;
      if (v < 0) v += base_;
      return v;
    }
    case SourceSpec::Kind::List: {
      if (level > spec_.values.size())
        throw SourceExhausted("symbol list has " +
                              std::to_string(spec_.values.size()) +
                              " entries; level " + std::to_string(level) +
                              " requested");
      int v = spec_.values[level - 1] % base_;
      if (v < 0) v += base_;
      return v;
    }
    case SourceSpec::Kind::Seeded:
      return static_cast<int>(mix64(spec_.seed, level) %
                              static_cast<std::uint64_t>(base_));
  }
  throw std::logic_error("unreachable");
}

}  // namespace primefractal
