#ifndef GGC_MATRIX_HPP
#define GGC_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "ggc/sparse.hpp"

namespace ggc {

// Sparse matrix over Q, row-major.  Immutable for all practical purposes
// once filled; rank and friends never mutate.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(
      std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseVec& row(int r) const { return data_[r]; }
  Rat at(int r, int c) const;
  void set(int r, int c, const Rat& v);
  void set_row(int r, SparseVec v);

  RationalMatrix transpose() const;

  // Exact rank over Q (echelon elimination with per-row content stripping).
  int rank() const;

  bool operator==(const RationalMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

// Dense exact helpers for the small symmetric systems that appear in
// blockwise Gram elimination.
using DenseMatrix = std::vector<std::vector<Rat>>;

DenseMatrix dense_identity(int n);
// Gaussian elimination; throws std::runtime_error if singular.
std::vector<Rat> dense_solve(DenseMatrix a, std::vector<Rat> b);
DenseMatrix dense_inverse(const DenseMatrix& a);

// Incremental Gram-based independence filter for a positive semidefinite
// symmetric form.  Vectors are presented through their pairings with the
// previously accepted ones; acceptance keeps the inverse Gram up to date.
class GramFilter {
 public:
  int size() const { return static_cast<int>(inv_.size()); }
  const DenseMatrix& inverse() const { return inv_; }

  // pair_prev[i] = <v, w_i> against accepted vectors, self = <v, v>.
  // Returns true (and absorbs the vector) iff v is independent modulo the
  // form's radical.  Throws std::runtime_error if the form is not PSD.
  bool try_add(const std::vector<Rat>& pair_prev, const Rat& self);

  // Coordinates of a vector class in the accepted basis, from its pairings.
  std::vector<Rat> solve(const std::vector<Rat>& pairings) const;

 private:
  DenseMatrix inv_;  // inverse of the accepted Gram block
};

}  // namespace ggc

#endif
