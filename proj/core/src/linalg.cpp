#include "sawlab/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "sawlab/error.hpp"

namespace sawlab {

Echelon reduce_rows(RatMatrix m, std::size_t columns) {
  Echelon out;
  out.columns = columns;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < columns; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m, std::size_t columns) {
  return reduce_rows(m, columns).rows.size();
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t columns) {
  if (a.size() != b.size()) throw UsageError("solve: row count mismatch");
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(columns);
    aug[i].push_back(b[i]);
  }
  const Echelon e = reduce_rows(std::move(aug), columns + 1);
  RatVector x(columns, 0);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == columns) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][columns];
  }
  return x;
}

RatMatrix nullspace(const RatMatrix& a, std::size_t columns) {
  const Echelon e = reduce_rows(a, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(columns, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVector SpanTracker::residual(const RatVector& v) const {
  RatVector r = v;
  r.resize(columns_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < columns_; ++c) r[c] -= f * rows_[i][c];
  }
  return r;
}

bool SpanTracker::in_span(const RatVector& v) const {
  const RatVector r = residual(v);
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool SpanTracker::add(const RatVector& v) {
  RatVector r = residual(v);
  std::size_t pivot = columns_;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (r[c] != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot == columns_) return false;
  const Rational inv = 1 / r[pivot];
  for (auto& x : r) x *= inv;
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    const Rational f = row[pivot];
    if (f == 0) continue;
    for (std::size_t c = 0; c < columns_; ++c) row[c] -= f * r[c];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  RatVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

// ---------------------------------------------------------------- integers

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntLattice::IntLattice(std::vector<std::vector<std::int64_t>> gens, std::size_t dim) : dim_(dim) {
  for (auto& g : gens) {
    if (g.size() != dim) throw UsageError("lattice generator has wrong dimension");
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < gens.size(); ++col) {
    // Euclid on column `col` among rows >= row
    while (true) {
      std::size_t best = gens.size();
      for (std::size_t r = row; r < gens.size(); ++r) {
        if (gens[r][col] == 0) continue;
        if (best == gens.size() || std::abs(gens[r][col]) < std::abs(gens[best][col])) best = r;
      }
      if (best == gens.size()) break;
      std::swap(gens[row], gens[best]);
      bool done = true;
      for (std::size_t r = row + 1; r < gens.size(); ++r) {
        if (gens[r][col] == 0) continue;
        const std::int64_t q = gens[r][col] / gens[row][col];
        for (std::size_t c = 0; c < dim; ++c) gens[r][c] -= q * gens[row][c];
        if (gens[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (gens[row][col] == 0) continue;
    if (gens[row][col] < 0) {
      for (auto& x : gens[row]) x = -x;
    }
    pivots_.push_back(col);
    ++row;
  }
  gens.resize(row);
  rows_ = std::move(gens);
  // reduce entries above pivots into [0, pivot)
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const std::int64_t q = floor_div(rows_[k][pivots_[i]], rows_[i][pivots_[i]]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < dim_; ++c) rows_[k][c] -= q * rows_[i][c];
    }
  }
}

std::vector<std::int64_t> IntLattice::reduce(std::vector<std::int64_t>& z) const {
  std::vector<std::int64_t> coeff(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    const std::int64_t q = floor_div(z[c], rows_[i][c]);
    if (q == 0) continue;
    coeff[i] = q;
    for (std::size_t k = 0; k < dim_; ++k) z[k] -= q * rows_[i][k];
  }
  return coeff;
}

bool IntLattice::contains(std::vector<std::int64_t> z) const {
  reduce(z);
  for (auto x : z) {
    if (x != 0) return false;
  }
  return true;
}

std::int64_t IntLattice::index() const {
  if (!full_rank()) return 0;
  std::int64_t det = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) det *= rows_[i][pivots_[i]];
  return det;
}

}  // namespace sawlab
