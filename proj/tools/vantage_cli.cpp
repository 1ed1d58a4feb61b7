// vantage: command-line driver for the ranking library.
//
// Exit codes: 0 success/verified, 1 refuted/failed/tie, 2 usage or parse error, 3 indeterminate.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vantage/bounds.hpp"
#include "vantage/constructions.hpp"
#include "vantage/enumeration.hpp"
#include "vantage/errors.hpp"
#include "vantage/io.hpp"
#include "vantage/signs.hpp"
#include "vantage/six_point.hpp"
#include "vantage/svg.hpp"
#include "vantage/witnesses.hpp"

using nlohmann::json;
using namespace vantage;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  unsigned precision_cap = 4096;
  std::string grid_step = "1/50";
  std::string format = "json";
  std::string out;
  bool timing = false;
  unsigned threads = 0;
};

struct Failure {
  int code;
};

RunConfig cfg;
std::string command_name;
std::string inputs;  // concatenated input bytes, for the digest

PrecisionPolicy policy() {
  PrecisionPolicy p;
  p.cap_bits = static_cast<mpfr_prec_t>(cfg.precision_cap);
  return p;
}

std::string read_input(const std::string& path) {
  std::string text = read_text_file(path);
  inputs += text;
  return text;
}

void emit(const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(cfg.out, text);
  }
}

// Wraps a result with the reproducibility header.
std::string report(const json& result) {
  json out;
  out["command"] = command_name;
  out["version"] = kVersion;
  out["seed"] = cfg.seed;
  out["inputs_digest"] = digest_hex(inputs);
  out["result"] = result;
  return out.dump(2);
}

json radical_json(const RadicalSum& r) { return {{"approx", r.approx()}, {"exact", r.to_string()}}; }

Ordering parse_order_arg(const std::string& text, std::size_t n) {
  Ordering o;
  std::string tok;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
      if (!tok.empty()) {
        try {
          o.perm.push_back(std::stoul(tok));
        } catch (const std::exception&) {
          throw ParseError("bad ordering entry '" + tok + "'");
        }
        tok.clear();
      }
    } else {
      tok += ch;
    }
  }
  if (o.size() != n || !o.is_permutation()) throw ParseError("ordering must be a permutation of 0.." + std::to_string(n - 1));
  return o;
}

void emit_catalog(const OrderingCatalog& cat, json summary) {
  if (cfg.format == "jsonl") {
    emit(catalog_to_jsonl(cat));
  } else if (cfg.format == "csv") {
    emit(catalog_summary_csv(cat.size(), cat.trials, cat.ties_skipped, cat.indeterminate));
  } else {
    summary["count"] = cat.size();
    summary["trials"] = cat.trials;
    summary["ties_skipped"] = cat.ties_skipped;
    summary["indeterminate"] = cat.indeterminate;
    json orderings = json::array();
    for (const auto& [o, e] : cat.entries) orderings.push_back(o.perm);
    summary["orderings"] = orderings;
    emit(report(summary));
  }
}

// ---------------------------------------------------------------------------------------------

int cmd_rank(const std::string& points_path, const std::string& vantage_path) {
  const CandidateSet c = parse_point_set(read_input(points_path));
  const VantageMultiset v = parse_multiset(read_input(vantage_path));
  try {
    const Ordering o = rank(c, v, policy());
    json res;
    res["ordering"] = o.perm;
    json sums = json::array();
    for (std::size_t i : o.perm) sums.push_back(radical_json(distance_sum(v, c[i])));
    res["distance_sums"] = sums;
    emit(report(res));
    return 0;
  } catch (const TieError& e) {
    json res;
    res["tie"] = {e.first(), e.second()};
    res["message"] = e.what();
    emit(report(res));
    return 1;
  }
}

int cmd_enum(const std::string& points_path, std::size_t k) {
  const CandidateSet c = parse_point_set(read_input(points_path));
  json summary;
  summary["k"] = k;
  OrderingCatalog cat;
  if (k == 1) {
    cat = enumerate_psi1_exact(c, policy());
    summary["method"] = c.dim == 1 ? "midpoint sweep" : "bisector arrangement";
  } else {
    if (c.dim != 1) throw PreconditionError("exact enumeration for k > 1 needs dimension 1");
    cat = enumerate_psi_k_d1_exact(c, k);
    summary["method"] = "slot cells";
  }
  emit_catalog(cat, summary);
  return 0;
}

int cmd_estimate(const std::string& points_path, std::size_t k) {
  const CandidateSet c = parse_point_set(read_input(points_path));
  const OrderingCatalog cat = estimate_psi(c, k, SamplerSpec{}, cfg.trials, cfg.seed, cfg.threads);
  json summary;
  summary["k"] = k;
  summary["method"] = "sampling (lower bound)";
  emit_catalog(cat, summary);
  return 0;
}

int cmd_bounds(const std::string& formula, unsigned n, unsigned d, unsigned k, unsigned big_n, const std::string& m,
               const std::string& delta, unsigned r, unsigned s) {
  BigInt value;
  json params;
  if (formula == "good-tideman") {
    value = good_tideman_bound(n, d);
    params = {{"n", n}, {"d", d}};
  } else if (formula == "warren") {
    value = warren_bound(big_n, BigInt(m), BigInt(delta));
    params = {{"N", big_n}, {"m", m}, {"delta", delta}};
  } else if (formula == "radical-warren") {
    value = radical_warren_bound(big_n, BigInt(m), BigInt(delta), r, s);
    params = {{"N", big_n}, {"m", m}, {"delta", delta}, {"r", r}, {"s", s}};
  } else if (formula == "exponent") {
    value = main_theorem_exponent(d, k);
    params = {{"d", d}, {"k", k}};
  } else if (formula == "psi-upper") {
    value = psi_upper_bound(n, d, k);
    params = {{"n", n}, {"d", d}, {"k", k}};
  } else if (formula == "stirling") {
    value = stirling_first_unsigned(n, r);
    params = {{"n", n}, {"r", r}};
  } else {
    throw PreconditionError("unknown formula " + formula);
  }
  if (cfg.format == "csv") {
    std::string p;
    for (auto it = params.begin(); it != params.end(); ++it) {
      if (!p.empty()) p += ";";
      p += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
    }
    emit("formula,params,value\n" + formula + "," + p + "," + value.get_str() + "\n");
  } else {
    emit(report({{"formula", formula}, {"params", params}, {"value", value.get_str()}}));
  }
  return 0;
}

// d = 1 flanking sets at a scale large enough for the grid, as used by the recursive builder.
struct FlankSetup {
  FlankingSets sets;
  Rational rf;
  std::vector<HatConfig> configs;
};

FlankSetup flank_setup(std::size_t k, std::size_t m) {
  FlankSetup s;
  const auto a = default_offsets_a(m);
  const auto b = default_offsets_b(m);
  const auto grid = d1_flanking_grid(a, b);
  Rational wmax = 1;
  for (const auto& [w1, w2] : grid) wmax = std::max({wmax, abs(w1), abs(w2)});
  for (const auto& v : b) wmax = std::max(wmax, abs(v));
  s.rf = 4;
  while (s.rf < 4 * static_cast<long>(k + 2) * (wmax + 1)) s.rf *= 2;
  s.sets = gen_d1_flanking(k, m, s.rf, a, b);
  for (const auto& [w1, w2] : grid) s.configs.push_back(hat_u_d1(k, s.rf, w1, w2));
  return s;
}

int cmd_d1_flank(std::size_t k, std::size_t m) {
  const FlankSetup s = flank_setup(k, m);
  const HatCatalog cat = enumerate_hat_psi(s.sets.hat1, s.sets.hat2, k, s.configs, cfg.trials, cfg.seed);
  if (cfg.format == "jsonl") {
    emit(hat_catalog_to_jsonl(cat));
  } else if (cfg.format == "csv") {
    emit(catalog_summary_csv(cat.size(), cat.trials, cat.ties_skipped, cat.indeterminate));
  } else {
    json pts1 = json::array();
    json pts2 = json::array();
    for (const auto& p : s.sets.hat1) pts1.push_back(to_string(p[0]));
    for (const auto& p : s.sets.hat2) pts2.push_back(to_string(p[0]));
    emit(report({{"k", k},
                 {"m", m},
                 {"R", to_string(s.rf)},
                 {"hat1", pts1},
                 {"hat2", pts2},
                 {"grid_configs", s.configs.size()},
                 {"distinct_hat_orderings", cat.size()},
                 {"target_m4", m * m * m * m}}));
  }
  return 0;
}

struct FlankedRun {
  FlankSetup setup;
  HatConfig u;
  StabilizationReport report;
};

FlankedRun run_flanked(const CandidateSet& c_prime, const VantageMultiset& v_prime, std::size_t m, std::size_t config) {
  if (c_prime.dim != 1 || v_prime.dim != 1) throw PreconditionError("flanked construction takes 1-dimensional input");
  FlankedRun run;
  run.setup = flank_setup(static_cast<std::size_t>(v_prime.total()), m);
  if (config >= run.setup.configs.size()) throw PreconditionError("--config out of range");
  run.u = run.setup.configs[config];
  LadderPolicy ladder;
  Rational start = 4;
  for (const auto& p : c_prime.points) {
    while (start * start < abs(p[0]) + 1) start *= 2;
  }
  ladder.start = start;
  run.report = check_composition(c_prime, v_prime, run.setup.sets.hat1, run.setup.sets.hat2, run.u, ladder);
  return run;
}

int cmd_flanked(const std::string& points_path, const std::string& vantage_path, std::size_t m, std::size_t config) {
  const CandidateSet c_prime = parse_point_set(read_input(points_path));
  const VantageMultiset v_prime = parse_multiset(read_input(vantage_path));
  const FlankedRun run = run_flanked(c_prime, v_prime, m, config);
  if (cfg.format == "svg") {
    if (!run.report.stabilized) throw Failure{1};
    const Rational r = run.report.threshold;
    emit(svg_flanked(build_flanked(c_prime, run.setup.sets.hat1, run.setup.sets.hat2, r),
                     lift_vantage(v_prime, run.u, r)));
    return 0;
  }
  json tried = json::array();
  for (const auto& r : run.report.tried) tried.push_back(to_string(r));
  json res{{"stabilized", run.report.stabilized}, {"tried", tried}, {"hat_R", to_string(run.setup.rf)}};
  if (run.report.stabilized) {
    const Rational r = run.report.threshold;
    const FlankedLayout layout = build_flanked(c_prime, run.setup.sets.hat1, run.setup.sets.hat2, r);
    const VantageMultiset v = lift_vantage(v_prime, run.u, r);
    res["threshold"] = to_string(r);
    res["ordering"] = rank(layout.candidates, v, policy()).perm;
    res["candidates"] = json::parse(point_set_to_json(layout.candidates));
    res["vantage"] = json::parse(multiset_to_json(v));
  } else {
    res["failure"] = run.report.failure;
  }
  emit(report(res));
  return run.report.stabilized ? 0 : 1;
}

int cmd_check_orderings(const std::string& points_path, std::size_t cell1, std::size_t cell2) {
  const CandidateSet c = parse_point_set(read_input(points_path));
  const OrderingCatalog cells = enumerate_psi1_exact(c, policy());
  std::vector<Point> samples;
  for (const auto& [sigma, e] : cells.entries) samples.push_back(e.witness.entries.front().point);
  if (cell1 >= samples.size() || cell2 >= samples.size()) {
    throw PreconditionError("cell index out of range (" + std::to_string(samples.size()) + " cells)");
  }
  const auto [v1, v2] = search_good_pair(c.points, samples[cell1], samples[cell2], cfg.seed);
  const auto [good, cert] = is_good_pair(v1, v2, c.points, policy());
  const CheckOrderingsResult res = gen_check_orderings(c.points, v1, v2, policy());
  if (cfg.format == "jsonl") {
    emit(check_catalog_to_jsonl(res.catalog));
  } else {
    auto pt = [](const Point& p) {
      json a = json::array();
      for (const auto& x : p.coords) a.push_back(to_string(x));
      return a;
    };
    json transcript = cert.transcript;
    emit(report({{"v1", pt(v1)},
                 {"v2", pt(v2)},
                 {"good", good},
                 {"gamma", gamma_count(v1, v2, c.points)},
                 {"crossings", res.crossings},
                 {"distinct_orderings", res.catalog.size()},
                 {"chains_verified", res.chains_verified},
                 {"transcript", transcript}}));
  }
  return res.chains_verified ? 0 : 1;
}

int cmd_lower_bound(std::size_t d, std::size_t k, std::size_t n) {
  const LowerBoundConfig lb = build_lower_bound_config(d, k, n, cfg.seed);
  if (cfg.format == "jsonl") {
    emit(catalog_to_jsonl(lb.catalog));
    return 0;
  }
  if (cfg.format == "csv") {
    emit("d,k,n,orderings\n" + std::to_string(d) + "," + std::to_string(k) + "," +
         std::to_string(lb.candidates.size()) + "," + std::to_string(lb.catalog.size()) + "\n");
    return 0;
  }
  emit(report({{"d", d},
               {"k", k},
               {"n", lb.candidates.size()},
               {"orderings", lb.catalog.size()},
               {"recipe", lb.recipe},
               {"candidates", json::parse(point_set_to_json(lb.candidates))}}));
  return 0;
}

int emit_certificate(const WitnessCertificate& c, json extra = json::object()) {
  json res = json::parse(certificate_to_json(c));
  for (auto it = extra.begin(); it != extra.end(); ++it) res[it.key()] = it.value();
  emit(report(res));
  return c.verified ? 0 : 1;
}

int cmd_witness(const std::string& kind, const std::string& points_path, const std::string& order_text) {
  const CandidateSet c = parse_point_set(read_input(points_path));
  const Ordering o = parse_order_arg(order_text, c.size());
  if (kind != "distmatrix" && !is_protrusive(c, o)) {
    emit(report({{"ordering", o.perm}, {"verified", false}, {"reason", "ordering is not protrusive"}}));
    return 1;
  }
  if (kind == "d1") return emit_certificate(witness_d1(c, o));
  if (kind == "affine") return emit_certificate(witness_affine_independent(c, o));
  if (kind == "four") return emit_certificate(witness_small(c, o));
  if (kind == "distmatrix") {
    try {
      const DistanceMatrixWitness w = witness_by_distance_matrix(c, o, policy());
      json weights = json::array();
      for (const auto& x : w.weights) weights.push_back(x.get_str());
      return emit_certificate(w.certificate,
                              {{"K", w.k.get_str()}, {"weights", weights}, {"rounding_within_tenth", w.rounding_within_tenth}});
    } catch (const NotApplicableError& e) {
      emit(report({{"ordering", o.perm}, {"verified", false}, {"reason", e.what()}}));
      return 1;
    }
  }
  throw PreconditionError("unknown witness kind " + kind);
}

int cmd_sixpoint(const std::string& far) {
  const SixPointReport rep = verify_six_point(parse_rational(cfg.grid_step), parse_rational(far), cfg.threads);
  emit(report(json::parse(six_point_report_to_json(rep))));
  return rep.pass ? 0 : 1;
}

int cmd_noga(unsigned l, const std::string& delta, unsigned m) {
  const NogaReport rep = verify_noga_family(l, parse_rational(delta), policy(), cfg.threads);
  const auto patterns = noga_sign_patterns(m, parse_rational(delta), policy());
  emit(report({{"l", l},
               {"delta", delta},
               {"ok", rep.ok},
               {"checks", rep.checks},
               {"failures", rep.failures},
               {"pattern_vectors", m},
               {"distinct_patterns", patterns.size()}}));
  return rep.ok && patterns.size() == (std::size_t{1} << m) ? 0 : 1;
}

int cmd_galois(unsigned r, unsigned s) {
  const GaloisReport rep = verify_galois_product(r, s, 10, cfg.seed);
  const bool ok = rep.exponents_divisible && rep.integer_coefficients && rep.numeric_agreements == rep.numeric_checks;
  emit(report({{"r", r},
               {"s", s},
               {"monomials", rep.poly.size()},
               {"polynomial", rep.integer_coefficients ? poly_to_string(rep.poly) : std::string("(non-integer)")},
               {"exponents_divisible", rep.exponents_divisible},
               {"integer_coefficients", rep.integer_coefficients},
               {"numeric_checks", rep.numeric_checks},
               {"numeric_agreements", rep.numeric_agreements},
               {"max_relative_error", rep.max_relative_error}}));
  return ok ? 0 : 1;
}

int cmd_plot(const std::string& what, const std::string& points_path) {
  if (what == "sixpoint") {
    emit(svg_six_point());
    return 0;
  }
  if (points_path.empty()) throw PreconditionError("--points is required for this plot");
  const CandidateSet c = parse_point_set(read_input(points_path));
  if (what == "points") emit(svg_point_set(c));
  else if (what == "arrangement") emit(svg_bisector_arrangement(c));
  else throw PreconditionError("unknown plot " + what);
  return 0;
}

// Experimental: protrusive orderings of a planar set not reached by sampling with up to k_max points.
int cmd_probe(const std::string& points_path, std::size_t k_max) {
  const CandidateSet c = parse_point_set(read_input(points_path));
  if (c.size() > 7) throw GuardExceeded("probe supports at most 7 points");
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Ordering> protrusive;
  do {
    if (is_protrusive(c, Ordering{perm})) protrusive.push_back(Ordering{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  OrderingCatalog seen;
  for (std::size_t k = 1; k <= k_max; ++k) seen.merge(estimate_psi(c, k, SamplerSpec{}, cfg.trials, cfg.seed + k, cfg.threads));
  json missing = json::array();
  for (const auto& o : protrusive) {
    if (!seen.contains(o)) missing.push_back(o.perm);
  }
  emit(report({{"protrusive", protrusive.size()},
               {"witnessed", seen.size()},
               {"unwitnessed", missing},
               {"note", "sampling only; an unwitnessed ordering may still be achievable"}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rankings of points by sums of distances to vantage points"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "64-bit seed for all sampling");
  app.add_option("--trials", cfg.trials, "Sampling trials")->check(CLI::PositiveNumber);
  app.add_option("--precision-cap", cfg.precision_cap, "Largest MPFR precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--grid-step", cfg.grid_step, "Grid step (rational) for the six-point check");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "jsonl", "svg"}));
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_flag("--timing", cfg.timing, "Print wall time to stderr");

  std::string points;
  std::string vantage_file;
  std::size_t k = 1;
  std::size_t m = 2;
  std::size_t d = 1;
  std::size_t n = 8;
  std::string order;
  std::size_t cell1 = 0;
  std::size_t cell2 = 1;
  std::size_t config = 0;
  std::function<int()> action;

  auto* rank_cmd = app.add_subcommand("rank", "Order candidates by distance sum");
  rank_cmd->add_option("--points", points, "Candidate point-set JSON")->required();
  rank_cmd->add_option("--vantage", vantage_file, "Vantage multiset JSON")->required();
  rank_cmd->callback([&] { action = [&] { return cmd_rank(points, vantage_file); }; });

  auto* enum_cmd = app.add_subcommand("enum", "Exact enumeration (k = 1 for d <= 2, k <= 3 for d = 1)");
  enum_cmd->add_option("--points", points)->required();
  enum_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  enum_cmd->callback([&] { action = [&] { return cmd_enum(points, k); }; });

  auto* est_cmd = app.add_subcommand("estimate", "Sampled lower bound on the number of orderings");
  est_cmd->add_option("--points", points)->required();
  est_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  est_cmd->callback([&] { action = [&] { return cmd_estimate(points, k); }; });

  std::string formula = "good-tideman";
  unsigned bn = 4, bd = 2, bk = 1, big_n = 1, br = 2, bs = 1;
  std::string bm = "1", bdelta = "1";
  auto* bounds_cmd = app.add_subcommand("bounds", "Counting formulas");
  bounds_cmd->add_option("formula", formula)
      ->check(CLI::IsMember({"good-tideman", "warren", "radical-warren", "exponent", "psi-upper", "stirling"}));
  bounds_cmd->add_option("--n", bn);
  bounds_cmd->add_option("--d", bd);
  bounds_cmd->add_option("--k", bk);
  bounds_cmd->add_option("--N", big_n);
  bounds_cmd->add_option("--m", bm);
  bounds_cmd->add_option("--delta", bdelta);
  bounds_cmd->add_option("--r", br);
  bounds_cmd->add_option("--s", bs);
  bounds_cmd->callback([&] { action = [&] { return cmd_bounds(formula, bn, bd, bk, big_n, bm, bdelta, br, bs); }; });

  auto* construct = app.add_subcommand("construct", "Lower-bound constructions");
  construct->require_subcommand(1);
  construct->fallthrough();
  auto* flank_cmd = construct->add_subcommand("d1-flank", "Flanking sets and their hat orderings");
  flank_cmd->add_option("--k", k);
  flank_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  flank_cmd->callback([&] { action = [&] { return cmd_d1_flank(k, m); }; });
  auto* flanked_cmd = construct->add_subcommand("flanked", "Compose a 1-D configuration with flanking sets");
  flanked_cmd->add_option("--points", points)->required();
  flanked_cmd->add_option("--vantage", vantage_file)->required();
  flanked_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  flanked_cmd->add_option("--config", config, "Index into the flanking parameter grid");
  flanked_cmd->callback([&] { action = [&] { return cmd_flanked(points, vantage_file, m, config); }; });
  auto* check_cmd = construct->add_subcommand("check-orderings", "Good pair and its crossing orderings");
  check_cmd->add_option("--points", points)->required();
  check_cmd->add_option("--cell1", cell1);
  check_cmd->add_option("--cell2", cell2);
  check_cmd->callback([&] { action = [&] { return cmd_check_orderings(points, cell1, cell2); }; });
  auto* lb_cmd = construct->add_subcommand("lower-bound", "Recursive configuration with a witnessed catalog");
  lb_cmd->add_option("--d", d);
  lb_cmd->add_option("--k", k);
  lb_cmd->add_option("--n", n);
  lb_cmd->callback([&] { action = [&] { return cmd_lower_bound(d, k, n); }; });

  auto* witness = app.add_subcommand("witness", "Explicit vantage multisets for an ordering");
  witness->require_subcommand(1);
  witness->fallthrough();
  for (const char* kind : {"d1", "distmatrix", "affine", "four"}) {
    auto* w = witness->add_subcommand(kind);
    w->add_option("--points", points)->required();
    w->add_option("--ordering", order, "Comma-separated candidate indices")->required();
    const std::string kind_s = kind;
    w->callback([&, kind_s] { action = [&, kind_s] { return cmd_witness(kind_s, points, order); }; });
  }

  auto* verify = app.add_subcommand("verify", "Certified checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::string far = "5/2";
  auto* six = verify->add_subcommand("sixpoint");
  six->add_option("--far", far, "Far-field radius");
  six->callback([&] { action = [&] { return cmd_sixpoint(far); }; });
  unsigned nl = 8, nm = 3;
  std::string ndelta = "1/5";
  auto* noga = verify->add_subcommand("noga");
  noga->add_option("--l", nl);
  noga->add_option("--delta", ndelta);
  noga->add_option("--m", nm);
  noga->callback([&] { action = [&] { return cmd_noga(nl, ndelta, nm); }; });
  unsigned gr = 2, gs = 2;
  auto* galois = verify->add_subcommand("galois");
  galois->add_option("--r", gr);
  galois->add_option("--s", gs);
  galois->callback([&] { action = [&] { return cmd_galois(gr, gs); }; });

  std::string what = "points";
  auto* plot = app.add_subcommand("plot", "SVG output");
  plot->add_option("what", what)->check(CLI::IsMember({"points", "arrangement", "sixpoint"}));
  plot->add_option("--points", points);
  plot->callback([&] { action = [&] { return cmd_plot(what, points); }; });

  std::size_t k_max = 3;
  auto* probe = app.add_subcommand("probe", "Experimental: protrusive orderings missed by sampling");
  probe->add_option("--points", points)->required();
  probe->add_option("--k-max", k_max);
  probe->callback([&] { action = [&] { return cmd_probe(points, k_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto* sub : app.get_subcommands()) {
    command_name = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) command_name += " " + inner->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = action ? action() : 2;
  } catch (const Failure& f) {
    code = f.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    code = 2;
  } catch (const TieError& e) {
    std::cerr << "tie: " << e.what() << "\n";
    code = 1;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    code = 3;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << "\n";
    code = 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }
  if (cfg.timing) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "wall_time_s=%.3f\n", s);
  }
  return code;
}
