#pragma once

// Group sources: the text group-file format and the built-in catalog.
//
// Group file:
//   # comment
//   degree 7
//   (1 2 4 3 6 7 5)
//   (4 5)(6 7)
//
// Catalog names: cyclic:k@n, young:a+b+..., block:mxr, alternating:n,
// symmetric:n, agl15, gl32, gl32-point, gl32-plane.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "hsp/class_profile.hpp"
#include "hsp/lab.hpp"
#include "hsp/perm.hpp"
#include "hsp/perm_group.hpp"

namespace hsp::catalog {

using perm::Permutation;

struct GroupSource {
  std::string name;
  /// FNV-1a digest of the source text (file contents or catalog name).
  std::string digest;
  int degree = 0;
  std::vector<Permutation> generators;
  /// Closed-form class profile, for families too large to enumerate.
  std::optional<ClassProfile> analytic_profile;

  perm::PermGroup group() const { return perm::PermGroup(static_cast<std::size_t>(degree), generators); }

  ClassProfile profile(const Limits& limits = {}) const {
    if (analytic_profile) return *analytic_profile;
    return perm::class_profile(group(), limits);
  }
};

inline std::string fnv1a_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// Parses the group-file format.
inline GroupSource parse_group_text(const std::string& text, const std::string& name = "<text>") {
  using K = ParseError::Kind;
  GroupSource src;
  src.name = name;
  src.digest = fnv1a_digest(text);
  std::istringstream in(text);
  std::string line;
  bool have_degree = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!have_degree) {
      std::smatch m;
      static const std::regex degree_re(R"(degree\s+(\d+))");
      if (!std::regex_match(line, m, degree_re)) {
        throw ParseError(K::Malformed, name + ":" + std::to_string(line_no) + ": expected 'degree n'");
      }
      src.degree = std::stoi(m[1]);
      if (src.degree < 1) throw ParseError(K::OutOfRange, name + ": degree must be positive");
      have_degree = true;
      continue;
    }
    try {
      src.generators.push_back(perm::parse_cycles(line, static_cast<std::size_t>(src.degree)));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError(K::Malformed, name + ": missing 'degree n' line");
  return src;
}

inline GroupSource load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::Malformed, "cannot open group file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str(), path);
}

namespace detail {

inline std::vector<Permutation> cycles(std::size_t n, std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (const char* t : texts) out.push_back(perm::parse_cycles(t, n));
  return out;
}

inline GroupSource make(const std::string& name, int degree, std::vector<Permutation> gens,
                        std::optional<ClassProfile> profile = std::nullopt) {
  GroupSource s;
  s.name = name;
  s.digest = fnv1a_digest(name);
  s.degree = degree;
  s.generators = std::move(gens);
  s.analytic_profile = std::move(profile);
  return s;
}

inline int to_int(const std::string& s) {
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw ParseError(ParseError::Kind::Malformed, "expected an integer, got '" + s + "'");
  }
}

}  // namespace detail

/// GL(3,2) acting on the 7 non-zero vectors of F_2^3 (vector v is point
/// v written in binary). Point and plane stabilizers are non-conjugate
/// subgroups of order 24 with equal class intersections.
inline GroupSource gl32() { return detail::make("gl32", 7, detail::cycles(7, {"(1 2 4 3 6 7 5)", "(4 5)(6 7)"})); }
inline GroupSource gl32_point() { return detail::make("gl32-point", 7, detail::cycles(7, {"(4 6)(5 7)", "(2 4 3 5)(6 7)"})); }
inline GroupSource gl32_plane() { return detail::make("gl32-plane", 7, detail::cycles(7, {"(2 3)(6 7)", "(1 2)(4 5 7 6)"})); }

inline bool is_catalog_name(const std::string& spec) {
  static const std::regex re(R"((cyclic:\d+@\d+)|(young:\d+(\+\d+)*)|(block:\d+x\d+)|(alternating:\d+)|(symmetric:\d+)|agl15|gl32|gl32-point|gl32-plane)");
  return std::regex_match(spec, re);
}

/// Resolves a catalog name. Throws ParseError for unknown names.
inline GroupSource from_catalog(const std::string& spec, const Limits& limits = {}) {
  std::smatch m;
  auto check_degree = [&](int n) {
    if (n < 1) throw PreconditionError("degree must be positive in '" + spec + "'");
    if (n > limits.max_degree) throw LimitError("degree " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_degree));
  };
  if (std::regex_match(spec, m, std::regex(R"(cyclic:(\d+)@(\d+))"))) {
    int k = detail::to_int(m[1]);
    int n = detail::to_int(m[2]);
    check_degree(n);
    return detail::make(spec, n, lab::generators::cyclic(k, n));
  }
  if (std::regex_match(spec, m, std::regex(R"(young:(\d+(\+\d+)*))"))) {
    std::vector<int> parts;
    std::string body = m[1];
    std::istringstream in(body);
    for (std::string tok; std::getline(in, tok, '+');) parts.push_back(detail::to_int(tok));
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    check_degree(n);
    return detail::make(spec, n, lab::generators::young(parts), lab::young_profile(parts));
  }
  if (std::regex_match(spec, m, std::regex(R"(block:(\d+)x(\d+))"))) {
    int blocks = detail::to_int(m[1]);
    int size = detail::to_int(m[2]);
    check_degree(blocks * size);
    return detail::make(spec, blocks * size, lab::generators::block(blocks, size), lab::block_group_profile(blocks, size));
  }
  if (std::regex_match(spec, m, std::regex(R"(alternating:(\d+))"))) {
    int n = detail::to_int(m[1]);
    check_degree(n);
    return detail::make(spec, n, lab::generators::alternating(n), lab::alternating_profile(n));
  }
  if (std::regex_match(spec, m, std::regex(R"(symmetric:(\d+))"))) {
    int n = detail::to_int(m[1]);
    check_degree(n);
    return detail::make(spec, n, lab::generators::symmetric(n), lab::symmetric_profile(n));
  }
  if (spec == "agl15") return detail::make(spec, 5, detail::cycles(5, {"(1 2 3 4 5)", "(2 3 5 4)"}));
  if (spec == "gl32") return gl32();
  if (spec == "gl32-point") return gl32_point();
  if (spec == "gl32-plane") return gl32_plane();
  throw ParseError(ParseError::Kind::Malformed, "unknown catalog name '" + spec + "'");
}

/// Catalog name if it looks like one, otherwise a group file path.
inline GroupSource resolve(const std::string& spec, const Limits& limits = {}) {
  if (is_catalog_name(spec)) return from_catalog(spec, limits);
  return load_group_file(spec);
}

}  // namespace hsp::catalog
