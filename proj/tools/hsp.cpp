// hsp: batch front end for the weak Fourier sampling library.
//
//   hsp analyze <group>
//   hsp compare <groupA> <groupB> [--parent <group>]
//   hsp sweep <cyclic|block|young> --from a --to b [--block-size r] [--format csv]
//   hsp coset <G> <H>
//   hsp check <orthogonality|sandwich|frobenius> [--n N] [G H]
//
// Groups are catalog names (symmetric:8, block:4x2, ...) or group files.
// Reports are JSON on stdout. Exit codes: 0 ok, 1 a check failed,
// 2 parse error, 3 limit exceeded, 4 precondition violated.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hsp/hsp.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace hsp;

struct Settings {
  unsigned threads = 1;
  int max_degree = 40;
  std::uint64_t max_elements = 1'000'000;
  std::uint64_t max_index = 100'000;
  unsigned digits = 20;
  double c = 1.0;
  double c_prime = 1.0;

  Limits limits() const {
    Limits l;
    l.max_degree = max_degree;
    l.max_elements = max_elements;
    l.max_index = max_index;
    l.threads = threads;
    return l;
  }

  qfs::Options options() const { return {threads, digits}; }
};

std::string frac(const Rational& r) { return to_fraction_string(r); }

Json parts_json(const std::vector<int>& parts) { return Json(parts); }

Json exact_json(const Rational& r, unsigned digits) {
  return Json{{"exact", frac(r)}, {"decimal", to_decimal_string(r, digits)}, {"precision", digits}};
}

Json sqrt_sum_json(const SqrtSum& s, unsigned digits) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back({{"coefficient", frac(t.coefficient)}, {"radicand", t.radicand.str()}});
  Json out{{"form", "sum coefficient / sqrt(radicand)"}, {"terms", terms}};
  if (auto sq = s.square()) out["square"] = frac(*sq);
  out["decimal"] = s.to_decimal(digits);
  out["precision"] = digits;
  return out;
}

Json source_json(const catalog::GroupSource& src) {
  return Json{{"name", src.name}, {"digest", src.digest}, {"degree", src.degree}};
}

catalog::GroupSource load(const std::string& spec, const Settings& s) {
  auto src = catalog::resolve(spec, s.limits());
  if (src.degree > s.max_degree) {
    throw LimitError("degree " + std::to_string(src.degree) + " of '" + spec + "' exceeds --max-degree " + std::to_string(s.max_degree));
  }
  return src;
}

ClassProfile profile_of(const catalog::GroupSource& src, const Settings& s) {
  try {
    return src.profile(s.limits());
  } catch (const LimitError& e) {
    throw LimitError(std::string(e.what()) + "; use a catalog family with a closed-form profile or raise --max-elements");
  }
}

Json profile_json(const ClassProfile& prof) {
  Json rows = Json::array();
  for (const auto& [t, c] : prof.counts) {
    if (c != 0) rows.push_back({{"cycle_type", parts_json(t.parts())}, {"count", c.str()}, {"class_size", sn_class_size(t).str()}});
  }
  return rows;
}

Json distribution_json(const qfs::IrrepDistribution& d) {
  Json rows = Json::array();
  for (const auto& [shape, p] : d.probs) rows.push_back({{"partition", parts_json(shape.parts())}, {"probability", frac(p)}});
  return rows;
}

Json bounds_json(const qfs::BoundsReport& b, unsigned digits) {
  Json out{{"lower", exact_json(b.lower, digits)}, {"upper", sqrt_sum_json(b.upper, digits)}};
  if (b.c_min) out["c_min"] = {{"cycle_type", parts_json(b.c_min->parts())}, {"class_size", b.c_min_size.str()}};
  if (b.exact_value) {
    out["lower_below_exact"] = b.lower_below_exact();
    out["exact_within_upper"] = b.exact_within_upper();
  }
  return out;
}

Json verdict_json(const Rational& d, const BigInt& order, double c) {
  double threshold = order > 1 ? 1.0 / qfs::polylog(order, c) : 0.0;
  return Json{{"log_base", 2},
              {"c", c},
              {"threshold", threshold},
              {"distinguishable", qfs::verdict(d, order, c)},
              {"note", "fixed-n report, not an asymptotic claim"}};
}

Json census_json(const lab::SupportCensus& census) {
  Json out = Json::object();
  for (const auto& [k, c] : census.counts) out[std::to_string(k)] = c.str();
  return out;
}

Json club_json(const lab::ClubReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"support", e.support}, {"count", e.count.str()}, {"log2_ratio", e.log2_ratio}, {"satisfied", e.satisfied}});
  }
  Json out{{"exponent", frac(r.exponent)}, {"entries", entries}};
  out["max_log2_ratio"] = r.max_log2_ratio ? Json(*r.max_log2_ratio) : Json(nullptr);
  out["note"] = "diagnostic only; the conjectured bound is asymptotic";
  return out;
}

Json poly_json(const qfs::PolyVerdict& v) {
  Json out{{"applicable", v.applicable},
           {"log_base", 2},
           {"log2_order", v.log2_order},
           {"order_threshold", v.order_threshold},
           {"class_threshold", v.class_threshold}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.witness) {
    out["witness"] = v.witness->to_string();
    out["witness_class_size"] = v.witness_class_size.str();
    if (v.witness_support) out["witness_support"] = *v.witness_support;
    out["distinguishable_side"] = v.distinguishable_side;
  }
  return out;
}

perm::PermGroup symmetric_group(int n) { return perm::PermGroup(static_cast<std::size_t>(n), lab::generators::symmetric(n)); }

Json cmd_analyze(const std::string& spec, const Settings& s) {
  auto src = load(spec, s);
  auto prof = profile_of(src, s);
  const int n = src.degree;
  if (prof.is_trivial()) throw PreconditionError("'" + spec + "' is the trivial group; D_H = 0 and the bounds need |H| >= 2");
  const auto opts = s.options();

  auto sums = qfs::character_sums(prof, s.threads);
  auto dist = qfs::distribution_from_sums(sums, n);
  Rational dh = qfs::dh_from_sums(sums, n);
  auto thm1 = qfs::thm1_bounds(n, prof, opts, false);
  thm1.exact_value = dh;
  auto cmin = qfs::cmin_bounds(n, prof, opts);
  cmin.exact_value = dh;
  auto prop = qfs::prop_upper(n, prof, opts);
  const BigInt sn_order = factorial(static_cast<unsigned>(n));

  Json out;
  out["command"] = {{"name", "analyze"}, {"group", spec}, {"c", s.c}, {"c_prime", s.c_prime}};
  out["inputs"] = Json::array({source_json(src)});
  out["degree"] = n;
  out["order"] = prof.order().str();
  out["minimal_degree"] = *prof.minimal_degree();
  out["class_profile"] = profile_json(prof);
  out["distribution"] = distribution_json(dist);
  out["distribution_total"] = frac(dist.total());
  out["dh"] = exact_json(dh, s.digits);
  out["class_bounds"] = bounds_json(thm1, s.digits);
  out["cmin_bounds"] = bounds_json(cmin, s.digits);
  out["prop_upper"] = sqrt_sum_json(prop.exact, s.digits);
  out["prop_upper_at_least_dh"] = prop.exact.compare(dh) != std::strong_ordering::less;
  out["sandwich_holds"] = thm1.sandwich_holds();
  out["verdict"] = verdict_json(dh, sn_order, s.c);
  auto census = lab::support_census(prof);
  out["support_census"] = census_json(census);
  out["club"] = club_json(lab::club_check(prof));
  out["poly_subgroup_verdict"] = poly_json(qfs::poly_subgroup_verdict(symmetric_group(n), src.group(), s.c, s.c_prime, s.limits()));

  auto g = src.group();
  Json structure{{"transitive", perm::is_transitive(g)}};
  if (perm::is_transitive(g)) {
    structure["primitive"] = perm::is_primitive(g);
    if (g.order() <= s.max_elements) {
      auto b = lab::babai_check(g, s.limits());
      structure["babai"] = {{"applicable", b.applicable},
                            {"alternating_or_symmetric", b.alternating_or_symmetric},
                            {"minimal_degree", b.minimal_degree ? Json(*b.minimal_degree) : Json(nullptr)},
                            {"bound", b.bound},
                            {"satisfied", b.satisfied}};
    }
  }
  out["structure"] = structure;
  return out;
}

Json gassmann_json(const coset::GassmannReport& r) {
  Json out{{"orders_equal", r.orders_equal},
           {"class_intersections_equal", r.class_intersections_equal},
           {"permutation_characters_equal", r.permutation_characters_equal}};
  out["conjugate"] = r.conjugate ? Json(*r.conjugate) : Json("undetermined");
  if (r.conjugator) out["conjugator"] = r.conjugator->to_string();
  if (r.distance) out["distance"] = frac(*r.distance);
  out["verdicts_consistent"] = r.consistent();
  return out;
}

Json cmd_compare(const std::string& a, const std::string& b, const std::string& parent_spec, const Settings& s) {
  auto sa = load(a, s);
  auto sb = load(b, s);
  if (sa.degree != sb.degree) throw PreconditionError("groups have different degrees (" + std::to_string(sa.degree) + " and " + std::to_string(sb.degree) + ")");
  const int n = sa.degree;
  std::string pspec = parent_spec.empty() ? "symmetric:" + std::to_string(n) : parent_spec;
  auto sp = load(pspec, s);
  if (sp.degree != n) throw PreconditionError("parent '" + pspec + "' has degree " + std::to_string(sp.degree));
  auto g = sp.group();
  auto h = sa.group();
  auto k = sb.group();
  if (!perm::is_subgroup(h, g)) throw PreconditionError("'" + a + "' is not a subgroup of '" + pspec + "'");
  if (!perm::is_subgroup(k, g)) throw PreconditionError("'" + b + "' is not a subgroup of '" + pspec + "'");

  Json out;
  out["command"] = {{"name", "compare"}, {"a", a}, {"b", b}, {"parent", pspec}};
  out["inputs"] = Json::array({source_json(sa), source_json(sb), source_json(sp)});
  out["degree"] = n;
  out["orders"] = {h.order().str(), k.order().str()};
  auto pa = profile_of(sa, s);
  auto pb = profile_of(sb, s);
  out["profiles_equal"] = pa == pb;
  out["d_between"] = exact_json(qfs::d_between(n, pa, pb, s.options()), s.digits);
  if (g.order() <= s.max_elements) {
    out["gassmann"] = gassmann_json(coset::gassmann_test(g, h, k, s.limits(), s.options()));
  } else {
    out["gassmann"] = {{"skipped", "parent order " + g.order().str() + " exceeds --max-elements"}};
  }
  return out;
}

struct SweepRow {
  int n = 0;
  std::string order;
  int minimal_degree = 0;
  Rational dh;
  Rational lower;
  std::string upper;
};

Json cmd_sweep(const std::string& family, int from, int to, int block_size, const Settings& s, std::string& csv) {
  if (family != "cyclic" && family != "block" && family != "young") throw ParseError(ParseError::Kind::Malformed, "unknown sweep family '" + family + "' (cyclic, block, young)");
  if (block_size < 1) throw PreconditionError("--block-size must be positive");
  std::vector<int> params;
  for (int v = from; v <= to; ++v) params.push_back(v);
  auto profile_for = [&](int v) -> ClassProfile {
    if (family == "cyclic") {
      if (v < 2) throw PreconditionError("cyclic sweep needs k >= 2");
      return perm::class_profile(perm::PermGroup(static_cast<std::size_t>(v), lab::generators::cyclic(v, v)), s.limits());
    }
    if (family == "block") return lab::block_group_profile(v, block_size);
    if (v < 1) throw PreconditionError("young sweep needs at least one factor");
    return lab::young_profile(std::vector<int>(static_cast<std::size_t>(v), block_size));
  };
  for (int v : params) {
    int n = family == "cyclic" ? v : v * block_size;
    if (n > s.max_degree) throw LimitError("row with degree " + std::to_string(n) + " exceeds --max-degree " + std::to_string(s.max_degree));
  }
  std::vector<SweepRow> rows(params.size());
  parallel_for(params.size(), s.threads, [&](std::size_t, std::size_t i) {
    auto prof = profile_for(params[i]);
    SweepRow& r = rows[i];
    r.n = prof.degree;
    r.order = prof.order().str();
    if (prof.is_trivial()) throw PreconditionError("sweep row " + std::to_string(params[i]) + " is the trivial group");
    r.minimal_degree = *prof.minimal_degree();
    auto b = qfs::thm1_bounds(r.n, prof, {1, s.digits});
    r.dh = *b.exact_value;
    r.lower = b.lower;
    r.upper = b.upper_decimal;
  });

  Json table = Json::array();
  std::ostringstream os;
  os << "param,n,order,minimal_degree,dh,dh_decimal,lower,upper_decimal\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    table.push_back({{"param", params[i]},
                     {"n", r.n},
                     {"order", r.order},
                     {"minimal_degree", r.minimal_degree},
                     {"dh", exact_json(r.dh, s.digits)},
                     {"lower", frac(r.lower)},
                     {"upper_decimal", r.upper}});
    os << params[i] << ',' << r.n << ',' << r.order << ',' << r.minimal_degree << ',' << frac(r.dh) << ','
       << to_decimal_string(r.dh, s.digits) << ',' << frac(r.lower) << ',' << r.upper << '\n';
  }
  csv = os.str();
  Json out;
  out["command"] = {{"name", "sweep"}, {"family", family}, {"from", from}, {"to", to}};
  if (family != "cyclic") out["command"]["block_size"] = block_size;
  out["rows"] = table;
  return out;
}

Json cmd_coset(const std::string& gspec, const std::string& hspec, const Settings& s) {
  auto sg = load(gspec, s);
  auto sh = load(hspec, s);
  if (sg.degree != sh.degree) throw PreconditionError("groups have different degrees");
  coset::CosetAction ca(sg.group(), sh.group(), s.limits());
  auto rank = coset::rank_subdegrees(ca, s.limits());

  Json out;
  out["command"] = {{"name", "coset"}, {"parent", gspec}, {"subgroup", hspec}, {"c", s.c}};
  out["inputs"] = Json::array({source_json(sg), source_json(sh)});
  out["parent_order"] = ca.parent().order().str();
  out["subgroup_order"] = ca.subgroup().order().str();
  out["index"] = ca.index();
  out["rank"] = rank.rank;
  out["subdegrees"] = rank.subdegrees;
  if (rank.rank_by_frobenius) {
    out["frobenius"] = {{"fixed_point_total", rank.fixed_point_total->str()},
                        {"rank_by_frobenius", frac(*rank.rank_by_frobenius)},
                        {"agrees", rank.frobenius_agrees()}};
  }
  if (!ca.subgroup().is_trivial() && ca.parent().order() <= s.max_elements) {
    auto fb = coset::fixpoint_bounds(ca, s.limits());
    out["fixpoint_bounds"] = {{"bound_i", exact_json(fb.bound_i, s.digits)}, {"bound_ii", exact_json(fb.bound_ii, s.digits)}};
  }
  auto av = coset::avg_subdegree_verdict(ca, s.c, s.limits());
  out["average_subdegree"] = {{"value", exact_json(av.average, s.digits)},
                              {"log_base", 2},
                              {"c", s.c},
                              {"threshold", av.threshold},
                              {"average_within_polylog", av.average_polylog},
                              {"order_exceeds_polylog", av.order_exceeds_polylog},
                              {"bound_ii", frac(av.bound_ii)},
                              {"bound_implies_distinguishable", av.bound_implies_distinguishable}};
  if (ca.parent().order() <= s.max_elements) {
    auto chi = coset::permutation_character(ca, s.limits());
    Json rows = Json::array();
    for (const auto& e : chi) {
      rows.push_back({{"representative", e.representative.to_string()},
                      {"class_size", e.class_size},
                      {"fixed", e.fixed},
                      {"subgroup_meet", e.subgroup_meet}});
    }
    out["permutation_character"] = rows;
    out["class_identity_holds"] = coset::class_identity_holds(ca, chi);
  }
  return out;
}

Json cmd_check(const std::string& suite, int n, const std::vector<std::string>& groups, const Settings& s, bool& passed) {
  Json out;
  out["command"] = {{"name", "check"}, {"suite", suite}};
  if (suite == "orthogonality") {
    if (n < 1) n = 8;
    out["command"]["n"] = n;
    Json rows = Json::array();
    passed = true;
    for (int m = 1; m <= n; ++m) {
      auto r = characters::orthogonality_check(m);
      passed = passed && r.passed();
      Json row{{"n", m}, {"classes", r.classes}, {"rows", r.rows_ok}, {"columns", r.columns_ok}, {"sum_of_squares", r.sum_of_squares_ok}};
      if (!r.counterexample.empty()) row["counterexample"] = r.counterexample;
      rows.push_back(row);
    }
    out["results"] = rows;
  } else if (suite == "sandwich") {
    if (n < 1) n = s.max_degree;
    out["command"]["n"] = n;
    Json rows = Json::array();
    passed = true;
    for (int m = 1; m <= n; ++m) {
      auto r = lab::class_sandwich_check(m, s.limits());
      passed = passed && r.passed;
      Json row{{"n", m}, {"classes", r.classes_checked}, {"passed", r.passed}};
      if (r.tightest_lower) row["tightest_lower"] = parts_json(r.tightest_lower->parts());
      if (r.tightest_upper) row["tightest_upper"] = parts_json(r.tightest_upper->parts());
      if (!r.first_violation.empty()) row["violation"] = r.first_violation;
      rows.push_back(row);
    }
    out["results"] = rows;
  } else if (suite == "frobenius") {
    if (groups.size() != 2) throw ParseError(ParseError::Kind::Malformed, "check frobenius needs two groups: G H");
    auto report = cmd_coset(groups[0], groups[1], s);
    if (!report.contains("frobenius")) throw LimitError("parent group too large to enumerate; raise --max-elements");
    out["command"]["parent"] = groups[0];
    out["command"]["subgroup"] = groups[1];
    out["frobenius"] = report["frobenius"];
    out["class_identity_holds"] = report["class_identity_holds"];
    passed = report["frobenius"]["agrees"].get<bool>() && report["class_identity_holds"].get<bool>();
  } else {
    throw ParseError(ParseError::Kind::Malformed, "unknown check suite '" + suite + "' (orthogonality, sandwich, frobenius)");
  }
  out["passed"] = passed;
  return out;
}

unsigned env_threads() {
  if (const char* v = std::getenv("HSP_THREADS")) {
    try {
      int t = std::stoi(v);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
    throw ParseError(ParseError::Kind::Malformed, std::string("HSP_THREADS must be a positive integer, got '") + v + "'");
  }
  return 1;
}

void emit(Json report, std::chrono::steady_clock::time_point start) {
  report["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weak Fourier sampling analysis for subgroups of S_n"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: $HSP_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", s.max_degree, "Largest permutation degree")->capture_default_str();
  app.add_option("--max-elements", s.max_elements, "Largest group that may be enumerated")->capture_default_str();
  app.add_option("--max-index", s.max_index, "Largest coset action")->capture_default_str();
  app.add_option("--digits", s.digits, "Fractional digits in decimal renderings")->capture_default_str();
  app.add_option("--c", s.c, "Exponent c in the (log2|G|)^-c threshold")->capture_default_str();
  app.add_option("--c-prime", s.c_prime, "Exponent c' for class sizes in the polylog subgroup test")->capture_default_str();

  std::string group_a, group_b, parent, family, suite, format = "json";
  int from = 0, to = -1, block_size = 2, check_n = 0;
  std::vector<std::string> check_groups;

  auto* analyze = app.add_subcommand("analyze", "Distribution, D_H, bounds and verdicts for one subgroup of S_n");
  analyze->add_option("group", group_a, "Catalog name or group file")->required();

  auto* compare = app.add_subcommand("compare", "D(H,K) and Gassmann tests for two subgroups");
  compare->add_option("a", group_a)->required();
  compare->add_option("b", group_b)->required();
  compare->add_option("--parent", parent, "Ambient group (default symmetric:n)");

  auto* sweep = app.add_subcommand("sweep", "D_H and bounds across a subgroup family");
  sweep->add_option("family", family, "cyclic (k-cycle in S_k), block (S_m on m blocks), young (S_b^m)")->required();
  sweep->add_option("--from", from, "First parameter (k or m)")->required();
  sweep->add_option("--to", to, "Last parameter (inclusive)")->required();
  sweep->add_option("--block-size", block_size, "Block size r for block, factor degree b for young")->capture_default_str();
  sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* coset_cmd = app.add_subcommand("coset", "Rank, subdegrees and fixed-point bounds of G acting on G/H");
  coset_cmd->add_option("parent", group_a)->required();
  coset_cmd->add_option("subgroup", group_b)->required();

  auto* check = app.add_subcommand("check", "Self-check suites");
  check->add_option("suite", suite, "orthogonality, sandwich or frobenius")->required();
  check->add_option("groups", check_groups, "G H (frobenius only)");
  check->add_option("--n", check_n, "Largest degree to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    s.threads = threads > 0 ? threads : env_threads();
    if (*analyze) {
      emit(cmd_analyze(group_a, s), start);
    } else if (*compare) {
      emit(cmd_compare(group_a, group_b, parent, s), start);
    } else if (*sweep) {
      std::string csv;
      auto report = cmd_sweep(family, from, to, block_size, s, csv);
      if (format == "csv") {
        std::cout << csv;
      } else {
        emit(report, start);
      }
    } else if (*coset_cmd) {
      emit(cmd_coset(group_a, group_b, s), start);
    } else if (*check) {
      bool passed = false;
      emit(cmd_check(suite, check_n, check_groups, s, passed), start);
      return passed ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "hsp: parse error: " << e.what() << '\n';
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "hsp: limit exceeded: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "hsp: precondition violated: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "hsp: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
