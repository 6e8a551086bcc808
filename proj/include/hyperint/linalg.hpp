#pragma once

// Exact sparse linear algebra over the rationals.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hyperint/upoly.hpp"

namespace hyperint {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

// Incremental Gaussian elimination for A·u = b with sparse rows.
//
// Rows are kept in echelon form keyed by pivot column (pivot coefficient 1).
// An inconsistent row (0 = nonzero) marks the system unsolvable.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}

  std::size_t unknowns() const { return n_; }
  bool consistent() const { return consistent_; }
  std::size_t rank() const { return pivots_.size(); }

  // Adds the equation sum row[i].second * u[row[i].first] = rhs.
  void add_equation(SparseRow row, Rational rhs = 0);

  // A particular solution with all free unknowns set to zero.
  std::optional<std::vector<Rational>> solve() const;

  // Basis of the solution space of the homogeneous system.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  struct Reduced {
    SparseRow row;  // leading entry is the pivot, coefficient 1
    Rational rhs;
  };
  std::vector<Rational> back_substitute(const std::vector<Rational>& free_values) const;

  std::size_t n_;
  bool consistent_ = true;
  std::map<std::size_t, Reduced> pivots_;
};

// Dense helpers.
using QMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

// Rank of a dense rational matrix.
std::size_t rank(QMatrix m);

// Kernel of the map v -> m·v.
std::vector<std::vector<Rational>> kernel(const QMatrix& m);

// Hermite normal form of the row lattice of an integer matrix; zero rows dropped.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

}  // namespace hyperint
