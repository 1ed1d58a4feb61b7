#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "vantage/compare.hpp"
#include "vantage/radical_sum.hpp"
#include "vantage/rational.hpp"

namespace vantage {

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const noexcept { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Rational dot(const Point& a, const Point& b);
Rational squared_norm(const Point& p);
Point zero_point(std::size_t dim);
/// The point (0, ..., 0, 1, 0, ...) with the 1 in coordinate `axis`.
Point unit_point(std::size_t dim, std::size_t axis);

/// Pairwise-distinct candidate points; candidate identity is the index.
struct CandidateSet {
  std::size_t dim = 0;
  std::vector<Point> points;

  CandidateSet() = default;
  /// Validates dimensions and distinctness; throws PreconditionError / DimensionMismatch.
  CandidateSet(std::size_t d, std::vector<Point> pts);

  std::size_t size() const noexcept { return points.size(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

struct VantageEntry {
  Point point;
  std::uint64_t multiplicity = 1;
};

struct VantageMultiset {
  std::size_t dim = 0;
  std::vector<VantageEntry> entries;

  VantageMultiset() = default;
  VantageMultiset(std::size_t d, std::vector<VantageEntry> e);
  /// Each point with multiplicity one.
  static VantageMultiset of(std::size_t d, const std::vector<Point>& points);

  /// Total size k = sum of multiplicities.
  std::uint64_t total() const noexcept;
  void add(const Point& p, std::uint64_t multiplicity = 1);
  /// Merges equal points and sorts entries; the multiset is unchanged.
  VantageMultiset canonical() const;
};

/// Permutation of candidate indices listed by increasing distance sum.
struct Ordering {
  std::vector<std::size_t> perm;

  std::size_t size() const noexcept { return perm.size(); }
  bool is_permutation() const;
  /// position[i] = rank of candidate i (0-based).
  std::vector<std::size_t> positions() const;

  friend auto operator<=>(const Ordering&, const Ordering&) = default;
  friend bool operator==(const Ordering&, const Ordering&) = default;
};

Rational squared_distance(const Point& p, const Point& q);

/// sqrt(sum (p_i - q_i)^2); throws DimensionMismatch.
RadicalSum distance(const Point& p, const Point& q);

/// D_V(c) = sum over entries of multiplicity * |c - v|.
RadicalSum distance_sum(const VantageMultiset& vantage, const Point& c);

/// Candidates sorted by strictly increasing distance sum. Throws TieError when two sums are equal
/// and IndeterminateError when a comparison is undecided at the precision cap.
Ordering rank(const CandidateSet& candidates, const VantageMultiset& vantage, const PrecisionPolicy& policy = {});

/// True iff every distance sum is distinct.
bool distinguishes(const CandidateSet& candidates, const VantageMultiset& vantage,
                   const PrecisionPolicy& policy = {});

/// For a one-dimensional multiset of even total size, replaces the two middle order statistics by
/// two copies of their midpoint. The ordering it induces on any candidate set it distinguishes is
/// unchanged.
VantageMultiset collapse_median(const VantageMultiset& vantage);

/// Sorts `keys` (one exact value per item) increasingly with certified comparisons, using double
/// enclosures as a filter. Throws TieError(i, j) with item indices on equality.
std::vector<std::size_t> certified_sort(std::span<const RadicalSum> keys, const PrecisionPolicy& policy = {});

}  // namespace vantage
