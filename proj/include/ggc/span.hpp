#ifndef GGC_SPAN_HPP
#define GGC_SPAN_HPP

#include <vector>

#include "ggc/matrix.hpp"
#include "ggc/sparse.hpp"

namespace ggc {

// Row span in echelon form: pivot columns strictly increasing, rows
// content-stripped.  Supports exact membership and incremental insertion.
class SpanBasis {
 public:
  explicit SpanBasis(int ambient_dim) : ambient_(ambient_dim) {}

  int ambient_dim() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::int32_t>& pivot_cols() const { return pivots_; }

  // Residual of v after elimination against the basis rows.
  SparseVec reduce(SparseVec v) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Inserts v if it enlarges the span; returns true iff it did.
  // Throws std::invalid_argument on dimension mismatch.
  bool insert(SparseVec v);

 private:
  void check_dim(const SparseVec& v) const;

  int ambient_;
  std::vector<SparseVec> rows_;        // sorted by pivot column
  std::vector<std::int32_t> pivots_;
};

// Expresses vectors in terms of a fixed list of independent rows.
// Used where span membership alone is not enough and coordinates are needed
// (e.g. rewriting images of operators in a chosen module basis).
class CoordSolver {
 public:
  // Rows must be linearly independent; throws otherwise.
  explicit CoordSolver(const std::vector<SparseVec>& rows, int ambient_dim);

  // Coordinates x with v = sum x_i rows[i]; throws std::runtime_error if
  // v is outside the span.
  std::vector<Rat> coords(const SparseVec& v) const;

 private:
  int ambient_;
  std::vector<SparseVec> echelon_;        // reduced rows
  std::vector<std::int32_t> pivots_;
  std::vector<std::vector<Rat>> trans_;   // echelon = trans * original
};

}  // namespace ggc

#endif
