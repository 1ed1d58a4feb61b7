#include "vantage/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vantage/errors.hpp"

namespace vantage {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad number: ") + e.what());
    }
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(BigInt(std::to_string(v.get<std::uint64_t>())))
                                  : Rational(BigInt(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_number_float()) {
    // Re-read the literal as printed so "0.1" stays 1/10.
    return parse_rational(v.dump());
  }
  throw ParseError("expected a number or a numeric string");
}

json point_to_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords) out.push_back(to_string(c));
  return out;
}

Point point_from_json(const json& v, std::size_t dim) {
  if (!v.is_array()) throw ParseError("point must be an array");
  if (v.size() != dim) throw ParseError("point has " + std::to_string(v.size()) + " coordinates, expected " +
                                        std::to_string(dim));
  std::vector<Rational> c;
  for (const auto& x : v) c.push_back(rational_from_json(x));
  return Point(std::move(c));
}

std::size_t dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned()) {
    throw ParseError("missing or invalid \"dim\"");
  }
  const std::size_t d = j["dim"].get<std::size_t>();
  if (d == 0) throw ParseError("\"dim\" must be positive");
  return d;
}

std::vector<Point> points_from_json(const json& j, std::size_t dim) {
  if (!j.contains("points") || !j["points"].is_array()) throw ParseError("missing \"points\" array");
  std::vector<Point> pts;
  for (const auto& p : j["points"]) pts.push_back(point_from_json(p, dim));
  return pts;
}

json multiset_json(const VantageMultiset& v) {
  json out;
  out["dim"] = v.dim;
  out["points"] = json::array();
  out["mult"] = json::array();
  for (const auto& e : v.entries) {
    out["points"].push_back(point_to_json(e.point));
    out["mult"].push_back(e.multiplicity);
  }
  return out;
}

VantageMultiset multiset_from_json(const json& j) {
  const std::size_t dim = dim_from_json(j);
  const auto pts = points_from_json(j, dim);
  std::vector<std::uint64_t> mult(pts.size(), 1);
  if (j.contains("mult")) {
    if (!j["mult"].is_array() || j["mult"].size() != pts.size()) throw ParseError("\"mult\" must match \"points\"");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!j["mult"][i].is_number_unsigned() || j["mult"][i].get<std::uint64_t>() == 0) {
        throw ParseError("multiplicities must be positive integers");
      }
      mult[i] = j["mult"][i].get<std::uint64_t>();
    }
  }
  std::vector<VantageEntry> entries;
  for (std::size_t i = 0; i < pts.size(); ++i) entries.push_back({pts[i], mult[i]});
  return VantageMultiset(dim, std::move(entries));
}

Ordering ordering_from_json(const json& v) {
  if (!v.is_array()) throw ParseError("ordering must be an array of indices");
  Ordering o;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) throw ParseError("ordering entries must be nonnegative integers");
    o.perm.push_back(x.get<std::size_t>());
  }
  if (!o.is_permutation()) throw ParseError("ordering is not a permutation");
  return o;
}

json radical_json(const RadicalSum& r) {
  json terms = json::array();
  for (const auto& t : r.terms()) terms.push_back(json::array({to_string(t.coeff), t.radicand.get_str()}));
  return terms;
}

RadicalSum radical_from_json(const json& v) {
  if (!v.is_array()) throw ParseError("radical terms must be an array");
  RadicalSum out;
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 2) throw ParseError("radical term must be [coeff, radicand]");
    out += RadicalSum::term(rational_from_json(t[0]), rational_from_json(t[1]));
  }
  return out;
}

json tagged_json(const TaggedOrdering& o) {
  json out = json::array();
  for (const auto& t : o.seq) out.push_back(json::array({static_cast<int>(t.side), t.index}));
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

CandidateSet parse_point_set(std::string_view json_text) {
  const json j = parse_json(json_text);
  const std::size_t dim = dim_from_json(j);
  auto pts = points_from_json(j, dim);
  try {
    return CandidateSet(dim, std::move(pts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string point_set_to_json(const CandidateSet& candidates) {
  json out;
  out["dim"] = candidates.dim;
  out["points"] = json::array();
  for (const auto& p : candidates.points) out["points"].push_back(point_to_json(p));
  return out.dump();
}

VantageMultiset parse_multiset(std::string_view json_text) { return multiset_from_json(parse_json(json_text)); }

std::string multiset_to_json(const VantageMultiset& vantage) { return multiset_json(vantage).dump(); }

Ordering parse_ordering(std::string_view json_text) {
  const json j = parse_json(json_text);
  return ordering_from_json(j.is_object() && j.contains("ordering") ? j["ordering"] : j);
}

std::string ordering_to_json(const Ordering& ordering) { return json(ordering.perm).dump(); }

std::string catalog_to_jsonl(const OrderingCatalog& catalog) {
  std::string out;
  for (const auto& [ordering, entry] : catalog.entries) {
    json line;
    line["ordering"] = ordering.perm;
    line["found_at"] = entry.found_at;
    line["witness"] = multiset_json(entry.witness);
    out += line.dump();
    out += '\n';
  }
  return out;
}

OrderingCatalog parse_catalog_jsonl(std::string_view text) {
  OrderingCatalog cat;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const json j = parse_json(line);
    if (!j.is_object() || !j.contains("ordering") || !j.contains("witness")) {
      throw ParseError("catalog line needs \"ordering\" and \"witness\"");
    }
    const std::uint64_t found = j.value("found_at", std::uint64_t{0});
    cat.insert(ordering_from_json(j["ordering"]), multiset_from_json(j["witness"]), found);
  }
  return cat;
}

std::string hat_catalog_to_jsonl(const HatCatalog& catalog) {
  std::string out;
  for (const auto& [ordering, entry] : catalog.entries) {
    json line;
    line["ordering"] = tagged_json(ordering);
    line["found_at"] = entry.found_at;
    line["k"] = entry.witness.k;
    line["u1"] = point_to_json(entry.witness.u1);
    line["u2"] = point_to_json(entry.witness.u2);
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string check_catalog_to_jsonl(const CheckCatalog& catalog) {
  std::string out;
  for (const auto& [ordering, entry] : catalog.entries) {
    json line;
    line["ordering"] = tagged_json(ordering);
    line["found_at"] = entry.found_at;
    line["v1"] = point_to_json(entry.witness.v1);
    line["v2"] = point_to_json(entry.witness.v2);
    line["x"] = to_string(entry.witness.x);
    line["y"] = to_string(entry.witness.y);
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string catalog_summary_csv(std::size_t count, std::uint64_t trials, std::uint64_t ties_skipped,
                                std::uint64_t indeterminate) {
  return "count,trials,ties_skipped,indeterminate\n" + std::to_string(count) + "," + std::to_string(trials) + "," +
         std::to_string(ties_skipped) + "," + std::to_string(indeterminate) + "\n";
}

std::string certificate_to_json(const WitnessCertificate& c) {
  json out;
  out["ordering"] = c.ordering.perm;
  out["vantage"] = multiset_json(c.vantage);
  out["verified"] = c.verified;
  out["method"] = c.method;
  out["margin"] = {{"approx", c.margin.approx()}, {"exact", c.margin.to_string()}, {"terms", radical_json(c.margin)}};
  return out.dump(2);
}

WitnessCertificate parse_certificate(std::string_view json_text) {
  json j = parse_json(json_text);
  // CLI output wraps the certificate in a header
  if (j.is_object() && j.contains("result") && !j.contains("ordering")) j = json(j["result"]);
  if (!j.is_object() || !j.contains("ordering") || !j.contains("vantage")) {
    throw ParseError("certificate needs \"ordering\" and \"vantage\"");
  }
  WitnessCertificate c;
  c.ordering = ordering_from_json(j["ordering"]);
  c.vantage = multiset_from_json(j["vantage"]);
  c.verified = j.value("verified", false);
  c.method = j.value("method", std::string());
  if (j.contains("margin") && j["margin"].contains("terms")) c.margin = radical_from_json(j["margin"]["terms"]);
  return c;
}

std::string six_point_report_to_json(const SixPointReport& r) {
  json out;
  out["pass"] = r.pass;
  out["far_field"] = {{"threshold", to_string(r.far_threshold)}, {"ok", r.far_field_ok}};
  out["grid"] = {{"step", to_string(r.grid_step)},
                 {"points", r.grid_points},
                 {"min_lower", r.grid_min_lo},
                 {"argmin", json::array({to_string(r.min_x), to_string(r.min_y)})},
                 {"escalated", r.escalated_cells},
                 {"ok", r.grid_ok}};
  out["lipschitz"] = {{"constant", 6}, {"bound_lower", r.lipschitz_bound}, {"ok", r.lipschitz_ok}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  return out.dump(2);
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vantage
