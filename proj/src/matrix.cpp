#include "ggc/matrix.hpp"

#include <stdexcept>

#include "ggc/span.hpp"

namespace ggc {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows.begin()->size()) : 0;
  RationalMatrix m(nr, nc);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (int v : row) m.set(r, c++, Rat(v));
    ++r;
  }
  return m;
}

Rat RationalMatrix::at(int r, int c) const { return data_[r].coeff(c); }

void RationalMatrix::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  data_[r].set(c, v);
}

void RationalMatrix::set_row(int r, SparseVec v) {
  if (!v.empty() && (v.leading().first < 0 || v.terms().back().first >= cols_))
    throw std::invalid_argument("row entries out of range");
  data_[r] = std::move(v);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].terms()) t.set(c, r, v);
  return t;
}

int RationalMatrix::rank() const {
  SpanBasis span(cols_);
  for (const auto& row : data_) span.insert(row);
  return span.rank();
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

DenseMatrix dense_identity(int n) {
  DenseMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

std::vector<Rat> dense_solve(DenseMatrix a, std::vector<Rat> b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("dense_solve: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = Rat(1) / a[col][col];
    for (int c = col; c < n; ++c) a[col][c] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
  const int n = static_cast<int>(a.size());
  DenseMatrix aug = a, inv = dense_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("dense_inverse: singular matrix");
    std::swap(aug[piv], aug[col]);
    std::swap(inv[piv], inv[col]);
    Rat s = Rat(1) / aug[col][col];
    for (int c = 0; c < n; ++c) {
      aug[col][c] *= s;
      inv[col][c] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rat f = aug[r][col];
      for (int c = 0; c < n; ++c) {
        aug[r][c] -= f * aug[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

bool GramFilter::try_add(const std::vector<Rat>& pair_prev, const Rat& self) {
  const int r = size();
  if (static_cast<int>(pair_prev.size()) != r)
    throw std::invalid_argument("GramFilter: pairing vector size mismatch");
  // Schur complement of the candidate against the accepted block.
  std::vector<Rat> x(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) x[i] += inv_[i][j] * pair_prev[j];
  Rat s = self;
  for (int i = 0; i < r; ++i) s -= pair_prev[i] * x[i];
  if (s < 0)
    throw std::runtime_error("GramFilter: form is not positive semidefinite");
  if (s == 0) return false;
  // Block update of the inverse.
  DenseMatrix next(r + 1, std::vector<Rat>(r + 1, Rat(0)));
  Rat sinv = Rat(1) / s;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) next[i][j] = inv_[i][j] + x[i] * x[j] * sinv;
    next[i][r] = -x[i] * sinv;
    next[r][i] = -x[i] * sinv;
  }
  next[r][r] = sinv;
  inv_ = std::move(next);
  return true;
}

std::vector<Rat> GramFilter::solve(const std::vector<Rat>& pairings) const {
  const int r = size();
  if (static_cast<int>(pairings.size()) != r)
    throw std::invalid_argument("GramFilter: pairing vector size mismatch");
  std::vector<Rat> x(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) x[i] += inv_[i][j] * pairings[j];
  return x;
}

}  // namespace ggc
