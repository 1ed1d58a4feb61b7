#include <doctest.h>

#include <string>

#include "support.hpp"
#include "vantage/enumeration.hpp"
#include "vantage/errors.hpp"
#include "vantage/io.hpp"
#include "vantage/svg.hpp"
#include "vantage/witnesses.hpp"

using namespace vantage;
using testing::plane;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io_svg") {
  TEST_CASE("point set round trip") {
    const CandidateSet c(2, {Point{Rational(1, 3), Rational(-7)}, Point{Rational(0), Rational(22, 7)}});
    CHECK(parse_point_set(point_set_to_json(c)).points == c.points);
    const CandidateSet d = parse_point_set(R"({"dim": 1, "points": [[0.1], ["3/4"], [2]]})");
    CHECK(d[0][0] == Rational(1, 10));
    CHECK(d[1][0] == Rational(3, 4));
    CHECK(d[2][0] == 2);
  }

  TEST_CASE("multiset round trip") {
    const VantageMultiset v(2, {{Point{Rational(1), Rational(2)}, 3}, {Point{Rational(-1, 2), Rational(0)}, 1}});
    const VantageMultiset back = parse_multiset(multiset_to_json(v));
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0].point == v.entries[0].point);
    CHECK(back.entries[0].multiplicity == 3);
    CHECK(back.total() == 4);
    CHECK(parse_multiset(R"({"dim": 1, "points": [[1], [2]]})").total() == 2);
  }

  TEST_CASE("ordering parse") {
    CHECK(parse_ordering("[2, 0, 1]") == Ordering{{2, 0, 1}});
    CHECK(parse_ordering(R"({"ordering": [1, 0]})") == Ordering{{1, 0}});
    CHECK(parse_ordering(ordering_to_json(Ordering{{0, 1}})) == Ordering{{0, 1}});
  }

  TEST_CASE("catalog round trip") {
    const OrderingCatalog cat = enumerate_psi1_exact(testing::line({0, 1, 3, 7}));
    const OrderingCatalog back = parse_catalog_jsonl(catalog_to_jsonl(cat));
    REQUIRE(back.size() == cat.size());
    for (const auto& [o, e] : cat.entries) {
      REQUIRE(back.contains(o));
      CHECK(back.entries.at(o).witness.entries.front().point == e.witness.entries.front().point);
    }
    CHECK(catalog_summary_csv(6, 100, 2, 0) == "count,trials,ties_skipped,indeterminate\n6,100,2,0\n");
  }

  TEST_CASE("certificate round trip") {
    const CandidateSet sq = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const WitnessCertificate w = witness_small(sq, Ordering{{0, 2, 1, 3}});
    const std::string text = certificate_to_json(w);
    const WitnessCertificate back = parse_certificate(text);
    CHECK(back.ordering == w.ordering);
    CHECK(back.vantage.entries.size() == w.vantage.entries.size());
    CHECK(compare(back.margin, w.margin) == ComparisonResult::Equal);
    CHECK(back.verified == w.verified);
    CHECK(parse_certificate(R"({"command": "witness", "result": )" + text + "}").ordering == w.ordering);
  }

  TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(parse_point_set("{not json"), ParseError);
    CHECK_THROWS_AS(parse_point_set(R"({"dim": 2, "points": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_point_set(R"({"dim": 1, "points": [["1/0"]]})"), ParseError);
    CHECK_THROWS_AS(parse_ordering(R"("abc")"), ParseError);
    CHECK_THROWS_AS(parse_catalog_jsonl("{\"ordering\": [0]}\nnot json\n"), ParseError);
  }

  TEST_CASE("digest is stable") {
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("a") == "af63dc4c8601ec8c");
  }

  TEST_CASE("arrangement svg") {
    const std::string svg = svg_bisector_arrangement(plane({{0, 0}, {4, 0}, {1, 3}}));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(occurrences(svg, "class=\"bisector\"") == 3);
    CHECK(occurrences(svg, "class=\"cell\"") == 6);
    CHECK(svg == svg_bisector_arrangement(plane({{0, 0}, {4, 0}, {1, 3}})));
  }

  TEST_CASE("six-point svg") {
    const std::string svg = svg_six_point();
    CHECK(occurrences(svg, "<circle") == 6);
    CHECK(occurrences(svg, "class=\"outer\"") == 3);
    CHECK(occurrences(svg, "class=\"inner\"") == 3);
  }

  TEST_CASE("svg rejects unusable input") {
    CHECK_THROWS_AS(svg_point_set(CandidateSet(2, {})), PreconditionError);
    CHECK_THROWS_AS(svg_point_set(testing::line({0, 1})), PreconditionError);
    CHECK(occurrences(svg_point_set(plane({{0, 0}, {1, 1}})), "<circle") == 2);
  }
}
