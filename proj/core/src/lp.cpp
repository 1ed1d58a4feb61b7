#include "vantage/lp.hpp"

#include <algorithm>

#include "vantage/errors.hpp"

namespace vantage::lp {
namespace {

// Dense tableau over y >= 0 where each free variable x_j = y_{2j} - y_{2j+1}.
class Tableau {
 public:
  Tableau(const Matrix& a, const std::vector<Rational>& b) : rows_(a.size()), free_vars_(a.empty() ? 0 : a[0].size()) {
    const std::size_t m = rows_;
    std::size_t artificials = 0;
    for (const auto& bi : b) artificials += bi < 0 ? 1 : 0;
    structural_ = 2 * free_vars_;
    slack_begin_ = structural_;
    art_begin_ = slack_begin_ + m;
    cols_ = art_begin_ + artificials;
    t_.assign(m, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m, 0);
    std::size_t next_art = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i].size() != free_vars_) throw PreconditionError("ragged constraint matrix");
      const bool flip = b[i] < 0;
      const int s = flip ? -1 : 1;
      for (std::size_t j = 0; j < free_vars_; ++j) {
        t_[i][2 * j] = s * a[i][j];
        t_[i][2 * j + 1] = -s * a[i][j];
      }
      t_[i][slack_begin_ + i] = s;
      t_[i][cols_] = s * b[i];
      if (flip) {
        t_[i][next_art] = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = slack_begin_ + i;
      }
    }
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<Rational>& objective, std::size_t allowed_cols) {
    for (;;) {
      std::size_t entering = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = objective[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
          if (t_[i][j] != 0 && objective[basis_[i]] != 0) reduced -= objective[basis_[i]] * t_[i][j];
        }
        if (reduced > 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed_cols) return true;
      std::size_t leaving = t_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][entering] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][entering];
        if (leaving == t_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == t_.size()) return false;
      pivot(leaving, entering);
    }
  }

  bool phase_one() {
    if (art_begin_ == cols_) return true;
    std::vector<Rational> objective(cols_, Rational(0));
    for (std::size_t j = art_begin_; j < cols_; ++j) objective[j] = -1;
    optimize(objective, cols_);
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] >= art_begin_ && t_[i][cols_] != 0) return false;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::size_t col = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == art_begin_) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, col);
        ++i;
      }
    }
    return true;
  }

  std::vector<Rational> free_solution() const {
    std::vector<Rational> y(cols_, Rational(0));
    for (std::size_t i = 0; i < t_.size(); ++i) y[basis_[i]] = t_[i][cols_];
    std::vector<Rational> x(free_vars_);
    for (std::size_t j = 0; j < free_vars_; ++j) x[j] = y[2 * j] - y[2 * j + 1];
    return x;
  }

  std::size_t structural_and_slack() const { return art_begin_; }
  std::size_t columns() const { return cols_; }
  std::size_t free_vars() const { return free_vars_; }

 private:
  bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t free_vars_;
  std::size_t structural_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t cols_ = 0;
  Matrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  if (a.size() != b.size()) throw PreconditionError("constraint matrix and bound vector sizes differ");
  Solution out;
  if (a.empty()) {
    const bool zero_objective = std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
    out.status = zero_objective ? Status::Optimal : Status::Unbounded;
    out.x.assign(c.size(), Rational(0));
    out.objective = 0;
    return out;
  }
  if (c.size() != a[0].size()) throw PreconditionError("objective size differs from variable count");
  Tableau tab(a, b);
  if (!tab.phase_one()) {
    out.status = Status::Infeasible;
    return out;
  }
  std::vector<Rational> objective(tab.columns(), Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    objective[2 * j] = c[j];
    objective[2 * j + 1] = -c[j];
  }
  if (!tab.optimize(objective, tab.structural_and_slack())) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.x = tab.free_solution();
  out.objective = 0;
  for (std::size_t j = 0; j < c.size(); ++j) out.objective += c[j] * out.x[j];
  return out;
}

std::optional<std::vector<Rational>> strict_interior_point(const Matrix& a, const std::vector<Rational>& b) {
  if (a.empty()) return std::vector<Rational>{};
  const std::size_t n = a[0].size();
  Matrix ext;
  ext.reserve(a.size() + 1);
  std::vector<Rational> rhs = b;
  for (const auto& row : a) {
    auto r = row;
    r.push_back(1);
    ext.push_back(std::move(r));
  }
  std::vector<Rational> cap(n + 1, Rational(0));
  cap[n] = 1;
  ext.push_back(cap);
  rhs.push_back(1);
  std::vector<Rational> objective(n + 1, Rational(0));
  objective[n] = 1;
  const Solution sol = maximize(ext, rhs, objective);
  if (sol.status != Status::Optimal || sol.objective <= 0) return std::nullopt;
  return std::vector<Rational>(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
}

bool in_convex_hull(std::span<const Point> points, const Point& q) {
  if (points.empty()) return false;
  const std::size_t m = points.size();
  const std::size_t d = q.dim();
  Matrix a;
  std::vector<Rational> b;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> row(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (points[i].dim() != d) throw DimensionMismatch(d, points[i].dim());
      row[i] = points[i][k];
    }
    a.push_back(row);
    b.push_back(q[k]);
    for (auto& v : row) v = -v;
    a.push_back(row);
    b.push_back(-q[k]);
  }
  a.emplace_back(m, Rational(1));
  b.emplace_back(1);
  a.emplace_back(m, Rational(-1));
  b.emplace_back(-1);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(m, Rational(0));
    row[i] = -1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  return maximize(a, b, std::vector<Rational>(m, Rational(0))).status == Status::Optimal;
}

}  // namespace vantage::lp
