#include "vantage/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "vantage/errors.hpp"

namespace vantage {

Point operator+(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  Point out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

Point operator-(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  Point out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

Point operator*(const Rational& s, const Point& p) {
  Point out = p;
  for (auto& x : out.coords) x *= s;
  return out;
}

Rational dot(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  Rational total = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) total += a[i] * b[i];
  return total;
}

Rational squared_norm(const Point& p) { return dot(p, p); }

Point zero_point(std::size_t dim) { return Point(std::vector<Rational>(dim, Rational(0))); }

Point unit_point(std::size_t dim, std::size_t axis) {
  Point p = zero_point(dim);
  p[axis] = 1;
  return p;
}

CandidateSet::CandidateSet(std::size_t d, std::vector<Point> pts) : dim(d), points(std::move(pts)) {
  if (d == 0) throw PreconditionError("candidate set dimension must be positive");
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionMismatch(d, p.dim());
  }
  std::vector<const Point*> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) throw PreconditionError("candidate points must be pairwise distinct");
  }
}

VantageMultiset::VantageMultiset(std::size_t d, std::vector<VantageEntry> e) : dim(d), entries(std::move(e)) {
  if (d == 0) throw PreconditionError("vantage multiset dimension must be positive");
  for (const auto& entry : entries) {
    if (entry.point.dim() != d) throw DimensionMismatch(d, entry.point.dim());
    if (entry.multiplicity == 0) throw PreconditionError("vantage multiplicities must be positive");
  }
}

VantageMultiset VantageMultiset::of(std::size_t d, const std::vector<Point>& points) {
  std::vector<VantageEntry> entries;
  entries.reserve(points.size());
  for (const auto& p : points) entries.push_back({p, 1});
  return VantageMultiset(d, std::move(entries));
}

std::uint64_t VantageMultiset::total() const noexcept {
  std::uint64_t k = 0;
  for (const auto& e : entries) k += e.multiplicity;
  return k;
}

void VantageMultiset::add(const Point& p, std::uint64_t multiplicity) {
  if (p.dim() != dim) throw DimensionMismatch(dim, p.dim());
  if (multiplicity == 0) return;
  entries.push_back({p, multiplicity});
}

VantageMultiset VantageMultiset::canonical() const {
  std::map<Point, std::uint64_t> merged;
  for (const auto& e : entries) merged[e.point] += e.multiplicity;
  VantageMultiset out;
  out.dim = dim;
  for (auto& [p, m] : merged) out.entries.push_back({p, m});
  return out;
}

bool Ordering::is_permutation() const {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i : perm) {
    if (i >= perm.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

std::vector<std::size_t> Ordering::positions() const {
  std::vector<std::size_t> pos(perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) pos[perm[r]] = r;
  return pos;
}

Rational squared_distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch(p.dim(), q.dim());
  Rational total = 0, diff;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    diff = p[i] - q[i];
    total += diff * diff;
  }
  return total;
}

RadicalSum distance(const Point& p, const Point& q) { return RadicalSum::sqrt(squared_distance(p, q)); }

RadicalSum distance_sum(const VantageMultiset& vantage, const Point& c) {
  if (c.dim() != vantage.dim) throw DimensionMismatch(vantage.dim, c.dim());
  RadicalSum total;
  for (const auto& e : vantage.entries) {
    total += RadicalSum::term(Rational(static_cast<unsigned long>(e.multiplicity)), squared_distance(c, e.point));
  }
  return total;
}

namespace {

template <class Less>
std::vector<std::size_t> sort_indices(std::size_t n, Less less) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), less);
  return idx;
}

// Sort by exact rational keys; ties raise TieError.
std::vector<std::size_t> sort_rational(const std::vector<Rational>& keys) {
  auto idx = sort_indices(keys.size(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t r = 1; r < idx.size(); ++r) {
    if (keys[idx[r]] == keys[idx[r - 1]]) {
      throw TieError(std::min(idx[r], idx[r - 1]), std::max(idx[r], idx[r - 1]));
    }
  }
  return idx;
}

// Sort with interval filter; `exact(i)` materializes the exact key lazily.
template <class Exact>
std::vector<std::size_t> sort_filtered(const std::vector<DoubleInterval>& boxes, Exact exact,
                                       const PrecisionPolicy& policy) {
  auto less = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    if (boxes[a].certainly_less(boxes[b])) return true;
    if (boxes[b].certainly_less(boxes[a])) return false;
    switch (compare(exact(a), exact(b), policy)) {
      case ComparisonResult::Less: return true;
      case ComparisonResult::Greater: return false;
      case ComparisonResult::Equal: throw TieError(std::min(a, b), std::max(a, b));
      case ComparisonResult::Indeterminate:
        throw IndeterminateError("distance sums of candidates " + std::to_string(a) + " and " +
                                 std::to_string(b) + " undecided at precision cap");
    }
    return false;
  };
  auto idx = sort_indices(boxes.size(), less);
  // std::sort may skip comparing some equal neighbours; check adjacent pairs explicitly.
  for (std::size_t r = 1; r < idx.size(); ++r) less(idx[r - 1], idx[r]);
  return idx;
}

}  // namespace

std::vector<std::size_t> certified_sort(std::span<const RadicalSum> keys, const PrecisionPolicy& policy) {
  std::vector<DoubleInterval> boxes;
  boxes.reserve(keys.size());
  for (const auto& k : keys) boxes.push_back(eval_double_interval(k));
  return sort_filtered(boxes, [&](std::size_t i) -> const RadicalSum& { return keys[i]; }, policy);
}

Ordering rank(const CandidateSet& candidates, const VantageMultiset& vantage, const PrecisionPolicy& policy) {
  if (candidates.dim != vantage.dim) throw DimensionMismatch(candidates.dim, vantage.dim);
  const std::size_t n = candidates.size();
  if (vantage.entries.empty()) {
    if (n > 1) throw TieError(0, 1);
    return Ordering{std::vector<std::size_t>(n, 0)};
  }

  bool single_point = true;
  for (const auto& e : vantage.entries) {
    if (!(e.point == vantage.entries.front().point)) {
      single_point = false;
      break;
    }
  }
  if (single_point) {
    std::vector<Rational> keys;
    keys.reserve(n);
    for (const auto& c : candidates.points) keys.push_back(squared_distance(c, vantage.entries.front().point));
    return Ordering{sort_rational(keys)};
  }

  if (candidates.dim == 1) {
    std::vector<Rational> keys(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : vantage.entries) {
        keys[i] += abs(Rational(candidates[i][0] - e.point[0])) * Rational(static_cast<unsigned long>(e.multiplicity));
      }
    }
    return Ordering{sort_rational(keys)};
  }

  const std::size_t d = candidates.dim;
  std::vector<std::vector<DoubleInterval>> vcoords;
  vcoords.reserve(vantage.entries.size());
  for (const auto& e : vantage.entries) {
    std::vector<DoubleInterval> row;
    for (const auto& x : e.point.coords) row.push_back(DoubleInterval::enclose(x));
    vcoords.push_back(std::move(row));
  }
  std::vector<DoubleInterval> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<DoubleInterval> cc;
    for (const auto& x : candidates[i].coords) cc.push_back(DoubleInterval::enclose(x));
    DoubleInterval total;
    for (std::size_t j = 0; j < vantage.entries.size(); ++j) {
      DoubleInterval sq;
      for (std::size_t a = 0; a < d; ++a) sq = sq + square(cc[a] - vcoords[j][a]);
      total = total + sqrt(sq) * DoubleInterval::exact(static_cast<double>(vantage.entries[j].multiplicity));
    }
    boxes[i] = total;
  }
  std::vector<std::optional<RadicalSum>> exact(n);
  auto get = [&](std::size_t i) -> const RadicalSum& {
    if (!exact[i]) exact[i] = distance_sum(vantage, candidates[i]);
    return *exact[i];
  };
  return Ordering{sort_filtered(boxes, get, policy)};
}

bool distinguishes(const CandidateSet& candidates, const VantageMultiset& vantage, const PrecisionPolicy& policy) {
  try {
    rank(candidates, vantage, policy);
    return true;
  } catch (const TieError&) {
    return false;
  }
}

VantageMultiset collapse_median(const VantageMultiset& vantage) {
  if (vantage.dim != 1) throw PreconditionError("collapse_median requires dimension 1");
  const std::uint64_t k = vantage.total();
  if (k == 0 || k % 2 != 0) throw PreconditionError("collapse_median requires an even, positive total size");
  VantageMultiset sorted = vantage.canonical();  // sorted by coordinate
  // 1-based order statistics k/2 and k/2 + 1.
  auto value_at = [&](std::uint64_t position) -> const Rational& {
    std::uint64_t seen = 0;
    for (const auto& e : sorted.entries) {
      seen += e.multiplicity;
      if (seen >= position) return e.point[0];
    }
    throw PreconditionError("order statistic out of range");
  };
  const Rational lower = value_at(k / 2);
  const Rational upper = value_at(k / 2 + 1);
  const Rational mid = (lower + upper) / 2;
  auto remove_one = [&](const Rational& x) {
    for (auto it = sorted.entries.begin(); it != sorted.entries.end(); ++it) {
      if (it->point[0] == x) {
        if (--it->multiplicity == 0) sorted.entries.erase(it);
        return;
      }
    }
  };
  remove_one(lower);
  remove_one(upper);
  sorted.add(Point{mid}, 2);
  return sorted.canonical();
}

}  // namespace vantage
