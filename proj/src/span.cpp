#include "ggc/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggc {

void SpanBasis::check_dim(const SparseVec& v) const {
  if (!v.empty() && (v.leading().first < 0 || v.terms().back().first >= ambient_))
    throw std::invalid_argument("SpanBasis: vector exceeds ambient dimension");
}

SparseVec SpanBasis::reduce(SparseVec v) const {
  check_dim(v);
  // Forward sweep: eliminating at a pivot column only introduces entries at
  // later columns, so one pass in increasing column order fully reduces v.
  std::size_t ti = 0;
  while (ti < v.terms().size()) {
    auto col = v.terms()[ti].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it != pivots_.end() && *it == col) {
      const auto& row = rows_[it - pivots_.begin()];
      v.axpy(-v.terms()[ti].second / row.leading().second, row);
    } else {
      ++ti;
    }
  }
  return v;
}

bool SpanBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  v.strip_content();
  auto piv = v.leading().first;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = it - pivots_.begin();
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

CoordSolver::CoordSolver(const std::vector<SparseVec>& rows, int ambient_dim)
    : ambient_(ambient_dim) {
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    SparseVec v = rows[i];
    std::vector<Rat> t(n, Rat(0));
    t[i] = Rat(1);
    // Eliminate against accepted echelon rows, tracking the combination.
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (std::size_t j = 0; j < echelon_.size(); ++j) {
        Rat c = v.coeff(pivots_[j]);
        if (c != 0) {
          Rat f = c / echelon_[j].leading().second;
          v.axpy(-f, echelon_[j]);
          for (int k = 0; k < n; ++k) t[k] -= f * trans_[j][k];
          changed = true;
        }
      }
    }
    if (v.empty())
      throw std::invalid_argument("CoordSolver: rows are linearly dependent");
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < v.leading().first) ++pos;
    pivots_.insert(pivots_.begin() + pos, v.leading().first);
    echelon_.insert(echelon_.begin() + pos, std::move(v));
    trans_.insert(trans_.begin() + pos, std::move(t));
  }
}

std::vector<Rat> CoordSolver::coords(const SparseVec& v) const {
  const int n = static_cast<int>(echelon_.size());
  std::vector<Rat> x(n, Rat(0));
  SparseVec r = v;
  bool changed = true;
  while (changed && !r.empty()) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      Rat c = r.coeff(pivots_[j]);
      if (c != 0) {
        Rat f = c / echelon_[j].leading().second;
        r.axpy(-f, echelon_[j]);
        for (int k = 0; k < n; ++k) x[k] += f * trans_[j][k];
        changed = true;
      }
    }
  }
  if (!r.empty()) throw std::runtime_error("CoordSolver: vector outside span");
  return x;
}

}  // namespace ggc
