#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace sawlab {

using Rational = mpq_class;
using RatVector = std::vector<mpq_class>;
using RatMatrix = std::vector<RatVector>;

/// Reduced row echelon form over Q.
struct Echelon {
  RatMatrix rows;               // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t columns = 0;
};

Echelon reduce_rows(RatMatrix m, std::size_t columns);
std::size_t rank(const RatMatrix& m, std::size_t columns);

/// One solution of A x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t columns);

/// Basis of { x : A x = 0 }, one vector per free column.
RatMatrix nullspace(const RatMatrix& a, std::size_t columns);

/// Incremental rank tracker: add() reports whether the vector was independent
/// of everything accepted so far (and keeps it only in that case).
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t columns) : columns_(columns) {}

  bool add(const RatVector& v);
  [[nodiscard]] bool in_span(const RatVector& v) const;
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

 private:
  RatVector residual(const RatVector& v) const;

  std::size_t columns_;
  RatMatrix rows_;  // each row normalised to 1 at its pivot
  std::vector<std::size_t> pivots_;
};

RatVector operator*(const RatMatrix& a, const RatVector& x);
Rational dot(const RatVector& a, const RatVector& b);

/// Integer lattice in Z^n given by generators, kept in row echelon form with
/// positive pivots.  Full-rank lattices give a canonical fundamental domain.
class IntLattice {
 public:
  IntLattice() = default;
  IntLattice(std::vector<std::vector<std::int64_t>> generators, std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::vector<std::int64_t>>& basis() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] bool full_rank() const { return rows_.size() == dim_; }

  /// Reduce z so each pivot coordinate lies in [0, pivot).  Returns the
  /// coefficients of the subtracted basis combination.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t>& z) const;
  [[nodiscard]] bool contains(std::vector<std::int64_t> z) const;
  /// |det| of the basis (the index in Z^n) when full rank, else 0.
  [[nodiscard]] std::int64_t index() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace sawlab
