#include "vantage/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "vantage/errors.hpp"
#include "vantage/lp.hpp"
#include "vantage/rng.hpp"

namespace vantage {
namespace {

int sgn(const Rational& v) { return mpq_sgn(v.get_mpq_t()); }

Line normalize(Rational a, Rational b, Rational c) {
  const Rational lead = a != 0 ? a : b;
  return Line{a / lead, b / lead, c / lead};
}

Rational eval_line(const Line& l, const Rational& x, const Rational& y) { return l.a * x + l.b * y - l.c; }

// Angular order of nonzero direction vectors, starting at the positive x axis.
bool angle_less(const std::pair<Rational, Rational>& u, const std::pair<Rational, Rational>& v) {
  auto half = [](const std::pair<Rational, Rational>& w) {
    return (w.second > 0 || (w.second == 0 && w.first > 0)) ? 0 : 1;
  };
  const int hu = half(u);
  const int hv = half(v);
  if (hu != hv) return hu < hv;
  return u.first * v.second - u.second * v.first > 0;
}

Rational l1(const std::pair<Rational, Rational>& w) { return abs(w.first) + abs(w.second); }

// Bisector directions between angularly consecutive directions.
std::vector<std::pair<Rational, Rational>> sector_directions(std::vector<std::pair<Rational, Rational>> dirs) {
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto& u = dirs[i];
    const auto& v = dirs[(i + 1) % dirs.size()];
    const Rational nu = l1(u);
    const Rational nv = l1(v);
    out.emplace_back(u.first / nu + v.first / nv, u.second / nu + v.second / nv);
  }
  return out;
}

std::vector<int> sign_vector(const std::vector<Line>& lines, const Rational& x, const Rational& y) {
  std::vector<int> s;
  s.reserve(lines.size());
  for (const auto& l : lines) s.push_back(sgn(eval_line(l, x, y)));
  return s;
}

OrderingCatalog psi1_d1(const CandidateSet& candidates, const PrecisionPolicy& policy) {
  OrderingCatalog catalog;
  std::vector<Rational> mids;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) mids.push_back((candidates[i][0] + candidates[j][0]) / 2);
  }
  std::sort(mids.begin(), mids.end());
  mids.erase(std::unique(mids.begin(), mids.end()), mids.end());
  std::vector<Rational> samples;
  if (mids.empty()) {
    samples.push_back(candidates.size() == 0 ? Rational(0) : candidates[0][0]);
  } else {
    samples.push_back(mids.front() - 1);
    for (std::size_t i = 0; i + 1 < mids.size(); ++i) samples.push_back((mids[i] + mids[i + 1]) / 2);
    samples.push_back(mids.back() + 1);
  }
  for (std::size_t s = 0; s < samples.size(); ++s) {
    VantageMultiset v = VantageMultiset::of(1, {Point{samples[s]}});
    catalog.insert(rank(candidates, v, policy), v, s);
  }
  return catalog;
}

}  // namespace

std::vector<Line> bisector_lines(const CandidateSet& candidates) {
  if (candidates.dim != 2) throw PreconditionError("bisector lines require planar candidates");
  std::vector<Line> lines;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Point& p = candidates[i];
      const Point& q = candidates[j];
      lines.push_back(normalize(2 * (q[0] - p[0]), 2 * (q[1] - p[1]), squared_norm(q) - squared_norm(p)));
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

Arrangement bisector_arrangement(const CandidateSet& candidates) {
  Arrangement arr;
  arr.lines = bisector_lines(candidates);
  const auto& lines = arr.lines;
  std::map<std::vector<int>, Point> cells;
  auto add_sample = [&](const Rational& x, const Rational& y) {
    auto s = sign_vector(lines, x, y);
    if (std::find(s.begin(), s.end(), 0) != s.end()) throw std::logic_error("arrangement sample on a line");
    cells.try_emplace(std::move(s), Point{x, y});
  };

  if (lines.empty()) {
    add_sample(Rational(0), Rational(0));
  } else {
    std::map<std::pair<Rational, Rational>, bool> vertices;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const Line& l = lines[i];
        const Line& m = lines[j];
        const Rational det = l.a * m.b - m.a * l.b;
        if (det == 0) continue;
        vertices.try_emplace({(l.c * m.b - m.c * l.b) / det, (l.a * m.c - m.a * l.c) / det}, true);
      }
    }
    if (vertices.empty()) {
      // All lines parallel and normalized to the same (a, b): sweep along the normal.
      const Rational a = lines.front().a;
      const Rational b = lines.front().b;
      const Rational nn = a * a + b * b;
      std::vector<Rational> cs;
      for (const auto& l : lines) cs.push_back(l.c);
      std::sort(cs.begin(), cs.end());
      std::vector<Rational> ts{cs.front() - 1};
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) ts.push_back((cs[i] + cs[i + 1]) / 2);
      ts.push_back(cs.back() + 1);
      for (const auto& t : ts) add_sample(t * a / nn, t * b / nn);
    } else {
      for (const auto& [vertex, unused] : vertices) {
        const auto& [px, py] = vertex;
        std::vector<std::pair<Rational, Rational>> dirs;
        Rational bound;
        bool have_bound = false;
        std::vector<const Line*> far;
        for (const auto& l : lines) {
          if (eval_line(l, px, py) == 0) {
            dirs.emplace_back(-l.b, l.a);
            dirs.emplace_back(l.b, -l.a);
          } else {
            far.push_back(&l);
          }
        }
        for (const auto& w : sector_directions(dirs)) {
          // Step small enough that no non-incident line is crossed.
          have_bound = false;
          for (const Line* l : far) {
            const Rational reach = abs(l->a) * abs(w.first) + abs(l->b) * abs(w.second);
            if (reach == 0) continue;
            const Rational lim = abs(eval_line(*l, px, py)) / reach;
            if (!have_bound || lim < bound) {
              bound = lim;
              have_bound = true;
            }
          }
          const Rational eps = have_bound ? Rational(bound / 2) : Rational(1);
          add_sample(px + eps * w.first, py + eps * w.second);
        }
      }
    }
    // Unbounded cells, far out along every sector direction at infinity.
    std::vector<std::pair<Rational, Rational>> dirs;
    for (const auto& l : lines) {
      dirs.emplace_back(-l.b, l.a);
      dirs.emplace_back(l.b, -l.a);
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    if (dirs.size() >= 2) {
      for (const auto& w : sector_directions(dirs)) {
        Rational t = 1;
        for (const auto& l : lines) {
          const Rational slope = abs(Rational(l.a * w.first + l.b * w.second));
          if (slope == 0) continue;
          const Rational need = 2 * (abs(l.c) + abs(l.a) + abs(l.b)) / slope + 1;
          if (need > t) t = need;
        }
        add_sample(t * w.first, t * w.second);
      }
    }
  }
  for (auto& [signs, sample] : cells) arr.cells.push_back(ArrangementCell{signs, sample});
  return arr;
}

OrderingCatalog enumerate_psi1_exact(const CandidateSet& candidates, const PrecisionPolicy& policy) {
  if (candidates.dim == 1) return psi1_d1(candidates, policy);
  if (candidates.dim != 2) throw PreconditionError("exact psi1 enumeration supports dimensions 1 and 2");
  OrderingCatalog catalog;
  const Arrangement arr = bisector_arrangement(candidates);
  for (std::size_t i = 0; i < arr.cells.size(); ++i) {
    VantageMultiset v = VantageMultiset::of(2, {arr.cells[i].sample});
    catalog.insert(rank(candidates, v, policy), v, i);
  }
  return catalog;
}

namespace {

// Recursive splitting of an open polyhedron {A x < b} by the affine functions g.x + h.
struct CellSplitter {
  const std::vector<std::vector<Rational>>& g;
  const std::vector<Rational>& h;
  std::function<void(const std::vector<Rational>&)> on_leaf;

  void run(lp::Matrix a, std::vector<Rational> b, std::vector<Rational> sample, std::size_t next) {
    while (next < g.size()) {
      const auto& gi = g[next];
      const bool constant = std::all_of(gi.begin(), gi.end(), [](const Rational& v) { return v == 0; });
      if (constant) {
        if (h[next] == 0) return;  // identically tied in this region
        ++next;
        continue;
      }
      Rational at = h[next];
      for (std::size_t j = 0; j < gi.size(); ++j) at += gi[j] * sample[j];
      // f > 0  <=>  -g.x < h ;  f < 0  <=>  g.x < -h
      std::vector<Rational> neg = gi;
      for (auto& v : neg) v = -v;
      if (at != 0) {
        const bool positive = at > 0;
        auto other_a = a;
        auto other_b = b;
        other_a.push_back(positive ? gi : neg);
        other_b.push_back(positive ? Rational(-h[next]) : h[next]);
        if (auto s = lp::strict_interior_point(other_a, other_b)) run(std::move(other_a), std::move(other_b), *s, next + 1);
        a.push_back(positive ? neg : gi);
        b.push_back(positive ? h[next] : Rational(-h[next]));
        ++next;
        continue;
      }
      auto pa = a;
      auto pb = b;
      pa.push_back(neg);
      pb.push_back(h[next]);
      if (auto s = lp::strict_interior_point(pa, pb)) run(std::move(pa), std::move(pb), *s, next + 1);
      a.push_back(gi);
      b.push_back(-h[next]);
      auto s = lp::strict_interior_point(a, b);
      if (!s) return;
      sample = *s;
      ++next;
    }
    on_leaf(sample);
  }
};

}  // namespace

OrderingCatalog enumerate_psi_k_d1_exact(const CandidateSet& candidates, std::size_t k) {
  if (candidates.dim != 1) throw PreconditionError("enumerate_psi_k_d1_exact requires dimension 1");
  const std::size_t n = candidates.size();
  if (n > 6 || k > 3) throw GuardExceeded("enumerate_psi_k_d1_exact supports n <= 6 and k <= 3");
  if (k == 0) throw PreconditionError("k must be positive");
  OrderingCatalog catalog;
  if (n == 0) return catalog;

  std::vector<Rational> sorted;
  for (const auto& p : candidates.points) sorted.push_back(p[0]);
  std::sort(sorted.begin(), sorted.end());
  // slot s is the open interval (sorted[s-1], sorted[s]); slots 0 and n are unbounded.
  std::uint64_t leaf_index = 0;
  std::vector<std::size_t> slots(k, 0);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) {
    if (pos < k) {
      for (std::size_t s = from; s <= n; ++s) {
        slots[pos] = s;
        choose(pos + 1, s);
      }
      return;
    }
    lp::Matrix a;
    std::vector<Rational> b;
    for (std::size_t l = 0; l < k; ++l) {
      if (slots[l] > 0) {
        std::vector<Rational> row(k, Rational(0));
        row[l] = -1;
        a.push_back(row);
        b.push_back(-sorted[slots[l] - 1]);
      }
      if (slots[l] < n) {
        std::vector<Rational> row(k, Rational(0));
        row[l] = 1;
        a.push_back(row);
        b.push_back(sorted[slots[l]]);
      }
    }
    // sign of (c_i - v_l) inside the slot
    auto sigma = [&](std::size_t i, std::size_t l) {
      const Rational& c = candidates[i][0];
      const auto pos_c = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
      return pos_c >= slots[l] ? 1 : -1;
    };
    std::vector<std::vector<Rational>> g;
    std::vector<Rational> h;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Rational> gi(k);
        Rational hi = 0;
        for (std::size_t l = 0; l < k; ++l) {
          const int si = sigma(i, l);
          const int sj = sigma(j, l);
          gi[l] = sj - si;
          hi += si * candidates[i][0] - sj * candidates[j][0];
        }
        g.push_back(std::move(gi));
        h.push_back(hi);
      }
    }
    auto start = lp::strict_interior_point(a, b);
    if (!start) return;
    CellSplitter splitter{g, h, [&](const std::vector<Rational>& x) {
                            VantageMultiset v(1, {});
                            for (const auto& xi : x) v.add(Point{xi});
                            v = v.canonical();
                            catalog.insert(rank(candidates, v), v, leaf_index++);
                          }};
    splitter.run(a, b, *start, 0);
  };
  choose(0, 0);
  return catalog;
}

namespace {

struct SamplerState {
  std::size_t dim = 0;
  std::vector<std::vector<double>> cand;
  std::vector<std::vector<DoubleInterval>> cand_box;
  std::vector<double> centroid;
  double diameter = 1.0;
  std::vector<std::vector<double>> features;
  /// Bisector hyperplanes as (midpoint, unit normal), for sampling far along them.
  std::vector<std::pair<std::vector<double>, std::vector<double>>> bisectors;
};

SamplerState prepare_sampler(const CandidateSet& candidates) {
  SamplerState st;
  st.dim = candidates.dim;
  const std::size_t n = candidates.size();
  st.centroid.assign(st.dim, 0.0);
  for (const auto& p : candidates.points) {
    std::vector<double> c;
    std::vector<DoubleInterval> box;
    for (std::size_t a = 0; a < st.dim; ++a) {
      c.push_back(p[a].get_d());
      box.push_back(DoubleInterval::enclose(p[a]));
      st.centroid[a] += c.back() / static_cast<double>(n);
    }
    st.cand.push_back(std::move(c));
    st.cand_box.push_back(std::move(box));
  }
  double diam = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t a = 0; a < st.dim; ++a) s += (st.cand[i][a] - st.cand[j][a]) * (st.cand[i][a] - st.cand[j][a]);
      diam = std::max(diam, std::sqrt(s));
    }
  }
  st.diameter = diam > 0.0 ? diam : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<double> mid(st.dim);
      std::vector<double> normal(st.dim);
      double len = 0.0;
      for (std::size_t a = 0; a < st.dim; ++a) {
        mid[a] = (st.cand[i][a] + st.cand[j][a]) / 2;
        normal[a] = st.cand[i][a] - st.cand[j][a];
        len += normal[a] * normal[a];
      }
      len = std::sqrt(len);
      for (auto& x : normal) x /= len;
      st.features.push_back(mid);
      if (st.dim >= 2) st.bisectors.emplace_back(std::move(mid), std::move(normal));
    }
  }
  if (st.dim == 2 && n >= 3) {
    const auto lines = bisector_lines(candidates);
    if (lines.size() <= 120) {
      for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          const Line& l = lines[i];
          const Line& m = lines[j];
          const Rational det = l.a * m.b - m.a * l.b;
          if (det == 0) continue;
          st.features.push_back({Rational((l.c * m.b - m.c * l.b) / det).get_d(),
                                 Rational((l.a * m.c - m.a * l.c) / det).get_d()});
        }
      }
    }
  }
  return st;
}

std::vector<double> sample_point(const SamplerState& st, const SamplerSpec& spec, CounterRng& rng) {
  const double total = spec.w_box + spec.w_gauss + spec.w_near + (st.features.empty() ? 0.0 : spec.w_feature) +
                       (st.bisectors.empty() ? 0.0 : spec.w_far);
  double pick = rng.uniform() * total;
  std::vector<double> out(st.dim);
  auto pick_scale = [&](const std::vector<double>& scales) {
    return scales.empty() ? 1.0 : scales[rng.below(scales.size())];
  };
  if ((pick -= spec.w_box) < 0) {
    const double half = pick_scale(spec.box_scales) * st.diameter;
    for (std::size_t a = 0; a < st.dim; ++a) out[a] = st.centroid[a] + rng.uniform(-half, half);
  } else if ((pick -= spec.w_gauss) < 0) {
    const auto& c = st.cand[rng.below(st.cand.size())];
    const double sigma = pick_scale(spec.gauss_scales) * st.diameter;
    for (std::size_t a = 0; a < st.dim; ++a) out[a] = c[a] + sigma * rng.normal();
  } else if ((pick -= spec.w_near) < 0) {
    const auto& c = st.cand[rng.below(st.cand.size())];
    const double r = spec.near_scale * st.diameter;
    for (std::size_t a = 0; a < st.dim; ++a) out[a] = c[a] + rng.uniform(-r, r);
  } else if (!st.bisectors.empty() && (pick -= spec.w_far) < 0) {
    const auto& [mid, normal] = st.bisectors[rng.below(st.bisectors.size())];
    // random direction inside the bisector, at log-uniform distance, with a relative log-uniform jitter
    std::vector<double> u(st.dim);
    double dot = 0.0;
    for (std::size_t a = 0; a < st.dim; ++a) {
      u[a] = rng.normal();
      dot += u[a] * normal[a];
    }
    double len = 0.0;
    for (std::size_t a = 0; a < st.dim; ++a) {
      u[a] -= dot * normal[a];
      len += u[a] * u[a];
    }
    len = std::sqrt(len);
    const double t = st.diameter * std::pow(10.0, rng.uniform() * spec.far_decades);
    const double sigma = t * std::pow(10.0, -rng.uniform() * spec.far_jitter_decades);
    for (std::size_t a = 0; a < st.dim; ++a) out[a] = mid[a] + t * u[a] / len + sigma * rng.normal();
  } else {
    const auto& f = st.features[rng.below(st.features.size())];
    const double sigma = pick_scale(spec.feature_scales) * st.diameter;
    for (std::size_t a = 0; a < st.dim; ++a) out[a] = f[a] + sigma * rng.normal();
  }
  return out;
}

// Certified ordering from double enclosures, or nullopt when two enclosures overlap.
std::optional<Ordering> filtered_order(const std::vector<DoubleInterval>& boxes) {
  std::vector<std::size_t> idx(boxes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return boxes[x].lo + boxes[x].hi < boxes[y].lo + boxes[y].hi;
  });
  for (std::size_t r = 1; r < idx.size(); ++r) {
    if (!boxes[idx[r - 1]].certainly_less(boxes[idx[r]])) return std::nullopt;
  }
  return Ordering{std::move(idx)};
}

OrderingCatalog sample_range(const CandidateSet& candidates, const SamplerState& st, std::size_t k,
                             const SamplerSpec& spec, std::uint64_t begin, std::uint64_t end, std::uint64_t seed) {
  OrderingCatalog catalog;
  const std::size_t n = candidates.size();
  std::vector<std::vector<double>> vs(k);
  std::vector<DoubleInterval> boxes(n);
  for (std::uint64_t t = begin; t < end; ++t) {
    ++catalog.trials;
    CounterRng rng(seed, t);
    bool finite = true;
    for (std::size_t l = 0; l < k; ++l) {
      vs[l] = sample_point(st, spec, rng);
      for (double x : vs[l]) finite = finite && std::isfinite(x);
    }
    if (!finite) {
      ++catalog.ties_skipped;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      DoubleInterval total;
      for (std::size_t l = 0; l < k; ++l) {
        DoubleInterval sq;
        for (std::size_t a = 0; a < st.dim; ++a) sq = sq + square(st.cand_box[i][a] - DoubleInterval::exact(vs[l][a]));
        total = total + (k == 1 ? sq : sqrt(sq));
      }
      boxes[i] = total;
    }
    auto make_witness = [&]() {
      VantageMultiset v(st.dim, {});
      for (const auto& p : vs) {
        std::vector<Rational> coords;
        for (double x : p) coords.push_back(rational_from_double(x));
        v.add(Point(std::move(coords)));
      }
      return v.canonical();
    };
    std::optional<Ordering> order = filtered_order(boxes);
    std::optional<VantageMultiset> witness;
    if (!order) {
      witness = make_witness();
      try {
        order = rank(candidates, *witness);
      } catch (const TieError&) {
        ++catalog.ties_skipped;
        continue;
      } catch (const IndeterminateError&) {
        ++catalog.indeterminate;
        continue;
      }
    }
    auto it = catalog.entries.find(*order);
    if (it != catalog.entries.end()) continue;  // earlier trial already holds the witness
    if (!witness) witness = make_witness();
    catalog.insert(*order, *witness, t);
  }
  return catalog;
}

}  // namespace

OrderingCatalog estimate_psi(const CandidateSet& candidates, std::size_t k, const SamplerSpec& spec,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (k == 0) throw PreconditionError("k must be positive");
  OrderingCatalog catalog;
  if (trials == 0 || candidates.size() == 0) {
    catalog.trials = trials;
    return catalog;
  }
  const SamplerState st = prepare_sampler(candidates);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  if (threads <= 1) return sample_range(candidates, st, k, spec, 0, trials, seed);

  std::vector<OrderingCatalog> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = trials * w / threads;
    const std::uint64_t end = trials * (w + 1) / threads;
    pool.emplace_back([&, w, begin, end] { parts[w] = sample_range(candidates, st, k, spec, begin, end, seed); });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : parts) catalog.merge(part);
  return catalog;
}

namespace {

double spread(std::span<const Point> a, std::span<const Point> b, std::vector<double>& centroid) {
  std::vector<const Point*> all;
  for (const auto& p : a) all.push_back(&p);
  for (const auto& p : b) all.push_back(&p);
  if (all.empty()) return 1.0;
  const std::size_t d = all.front()->dim();
  centroid.assign(d, 0.0);
  for (const Point* p : all) {
    for (std::size_t i = 0; i < d; ++i) centroid[i] += (*p)[i].get_d() / static_cast<double>(all.size());
  }
  double r = 0.0;
  for (const Point* p : all) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += std::pow((*p)[i].get_d() - centroid[i], 2);
    r = std::max(r, std::sqrt(s));
  }
  return r > 0.0 ? r : 1.0;
}

Point random_point_near(std::span<const Point> a, std::span<const Point> b, const std::vector<double>& centroid,
                        double radius, CounterRng& rng) {
  const std::size_t d = centroid.size();
  std::vector<Rational> coords(d);
  const std::size_t pool = a.size() + b.size();
  if (pool > 0 && rng.uniform() < 0.5) {
    const std::size_t pick = rng.below(pool);
    const Point& c = pick < a.size() ? a[pick] : b[pick - a.size()];
    const double sigma = radius * std::pow(10.0, -static_cast<double>(rng.below(4)));
    for (std::size_t i = 0; i < d; ++i) coords[i] = rational_from_double(c[i].get_d() + sigma * rng.normal());
  } else {
    const double half = radius * std::pow(10.0, static_cast<double>(rng.below(3)));
    for (std::size_t i = 0; i < d; ++i) coords[i] = rational_from_double(centroid[i] + rng.uniform(-half, half));
  }
  return Point(std::move(coords));
}

}  // namespace

HatCatalog enumerate_hat_psi(std::span<const Point> hat1, std::span<const Point> hat2, std::size_t k,
                             const std::vector<HatConfig>& grid, std::uint64_t trials, std::uint64_t seed) {
  HatCatalog catalog;
  std::uint64_t index = 0;
  auto consider = [&](const HatConfig& u) {
    ++catalog.trials;
    try {
      catalog.insert(hat_ordering(u, hat1, hat2), u, index);
    } catch (const TieError&) {
      ++catalog.ties_skipped;
    } catch (const IndeterminateError&) {
      ++catalog.indeterminate;
    }
    ++index;
  };
  for (const auto& u : grid) consider(u);
  if (trials == 0 || (hat1.empty() && hat2.empty())) return catalog;
  std::vector<double> centroid;
  const double radius = spread(hat1, hat2, centroid);
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    HatConfig u;
    u.k = k;
    u.u1 = random_point_near(hat1, hat2, centroid, radius, rng);
    u.u2 = random_point_near(hat1, hat2, centroid, radius, rng);
    consider(u);
  }
  return catalog;
}

CheckCatalog enumerate_check_psi(std::span<const Point> check1, std::span<const Point> check2,
                                 std::uint64_t trials, std::uint64_t seed) {
  CheckCatalog catalog;
  if (trials == 0 || (check1.empty() && check2.empty())) {
    catalog.trials = trials;
    return catalog;
  }
  std::vector<double> centroid;
  const double radius = spread(check1, check2, centroid);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++catalog.trials;
    CounterRng rng(seed, t);
    CheckConfig v;
    v.v1 = random_point_near(check1, check2, centroid, radius, rng);
    v.v2 = random_point_near(check1, check2, centroid, radius, rng);
    const double xmag = radius * std::pow(10.0, rng.uniform(-3.0, 3.0));
    v.x = rational_from_double(rng.uniform() < 0.5 ? -xmag : xmag);
    v.y = rational_from_double(std::pow(10.0, rng.uniform(-4.0, 4.0)) / radius);
    try {
      catalog.insert(check_ordering(v, check1, check2), v, t);
    } catch (const TieError&) {
      ++catalog.ties_skipped;
    } catch (const IndeterminateError&) {
      ++catalog.indeterminate;
    }
  }
  return catalog;
}

}  // namespace vantage
