#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vantage/catalog.hpp"
#include "vantage/constructions.hpp"
#include "vantage/geometry.hpp"
#include "vantage/six_point.hpp"
#include "vantage/witnesses.hpp"

namespace vantage {

/// Malformed input text (bad JSON, wrong shape, unparsable numbers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// {"dim": d, "points": [["p/q" | "decimal" | integer, ...], ...]}. Coordinates are parsed exactly.
CandidateSet parse_point_set(std::string_view json_text);
std::string point_set_to_json(const CandidateSet& candidates);

/// Point-set layout plus "mult": [m1, ...] (defaults to all ones when absent).
VantageMultiset parse_multiset(std::string_view json_text);
std::string multiset_to_json(const VantageMultiset& vantage);

Ordering parse_ordering(std::string_view json_text);
std::string ordering_to_json(const Ordering& ordering);

/// One {"ordering": [...], "found_at": n, "witness": {...}} object per line.
std::string catalog_to_jsonl(const OrderingCatalog& catalog);
OrderingCatalog parse_catalog_jsonl(std::string_view text);
std::string hat_catalog_to_jsonl(const HatCatalog& catalog);
std::string check_catalog_to_jsonl(const CheckCatalog& catalog);

/// "count,trials,ties_skipped,indeterminate" header and one row.
std::string catalog_summary_csv(std::size_t count, std::uint64_t trials, std::uint64_t ties_skipped,
                                std::uint64_t indeterminate);

std::string certificate_to_json(const WitnessCertificate& certificate);
WitnessCertificate parse_certificate(std::string_view json_text);

std::string six_point_report_to_json(const SixPointReport& report);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace vantage
