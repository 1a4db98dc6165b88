#include "ggc/finmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggc {

namespace {

// Ambient basis indices of V^{(x) N} are base-n digit strings.
long long pow_ll(int b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

SparseVec apply_ambient(const LieAlgebra& lie, int g, int n, int nslots,
                        const SparseVec& v) {
  const auto& mat = lie.rep_matrix(g);
  SparseVec out;
  for (const auto& [idx, c] : v.terms()) {
    for (int s = 0; s < nslots; ++s) {
      long long stride = pow_ll(n, nslots - 1 - s);
      int digit = static_cast<int>((idx / stride) % n);
      for (const auto& t : mat) {
        if (t[1] != digit) continue;
        long long nidx = idx + static_cast<long long>(t[0] - digit) * stride;
        out.set(static_cast<std::int32_t>(nidx),
                out.coeff(static_cast<std::int32_t>(nidx)) + c * t[2]);
      }
    }
  }
  return out;
}

}  // namespace

FiniteModule::FiniteModule(std::shared_ptr<const LieAlgebra> lie,
                           DominantWeight lambda)
    : lie_(std::move(lie)), lambda_(std::move(lambda)) {
  const auto& rs = lie_->root_system();
  const int l = rs.rank();
  const int n = lie_->matrix_size();
  if (static_cast<int>(lambda_.coords.size()) != l)
    throw std::invalid_argument("weight rank mismatch");
  if (!rs.is_dominant(lambda_.coords))
    throw std::invalid_argument("highest weight must be dominant");

  int nslots = 0;
  for (int i = 0; i < l; ++i) nslots += (i + 1) * lambda_.coords[i];

  // Highest weight vector: product of wedge patterns e_1 ^ ... ^ e_m, one
  // factor per unit of the m-th fundamental coordinate.
  std::vector<std::pair<SparseVec, int>> factors;  // (vector, width in slots)
  for (int m = l; m >= 1; --m) {
    for (int c = 0; c < lambda_.coords[m - 1]; ++c) {
      SparseVec w;
      std::vector<int> perm(m);
      for (int i = 0; i < m; ++i) perm[i] = i;
      do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) inv += perm[i] > perm[j];
        long long idx = 0;
        for (int i = 0; i < m; ++i) idx = idx * n + perm[i];
        w.set(static_cast<std::int32_t>(idx), Rat(inv % 2 ? -1 : 1));
      } while (std::next_permutation(perm.begin(), perm.end()));
      factors.push_back({w, m});
    }
  }
  SparseVec hw = SparseVec::unit(0);
  for (const auto& [f, width] : factors) {
    SparseVec next;
    long long stride = pow_ll(n, width);
    for (const auto& [ia, ca] : hw.terms())
      for (const auto& [ib, cb] : f.terms())
        next.set(static_cast<std::int32_t>(ia * stride + ib), ca * cb);
    hw = std::move(next);
  }

  // Cyclic closure under the lowering simple generators.
  struct Entry {
    SparseVec vec;
    WeightCoords wt;
  };
  std::vector<Entry> basis;
  std::map<WeightCoords, SpanBasis> spans;
  auto try_insert = [&](SparseVec v, const WeightCoords& wt) {
    auto it = spans.find(wt);
    if (it == spans.end())
      it = spans.emplace(wt, SpanBasis(static_cast<int>(pow_ll(n, nslots))))
               .first;
    if (it->second.insert(v)) {
      basis.push_back({std::move(v), wt});
      return true;
    }
    return false;
  };
  try_insert(hw, lambda_.coords);
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (int i = 0; i < l; ++i) {
      int f = lie_->f_simple(i);
      SparseVec img = apply_ambient(*lie_, f, n, nslots, basis[head].vec);
      if (img.empty()) continue;
      WeightCoords wt = basis[head].wt;
      for (int j = 0; j < l; ++j) wt[j] -= rs.cartan()[i][j];
      SparseVec copy = img;
      try_insert(std::move(copy), wt);
    }
  }

  const int d = static_cast<int>(basis.size());
  if (static_cast<long long>(d) != rs.weyl_dim(lambda_))
    throw std::logic_error("finite module dimension mismatch");
  weights_.reserve(d);
  for (const auto& b : basis) weights_.push_back(b.wt);

  // Coordinates of images in the chosen basis, per weight block.
  std::map<WeightCoords, std::vector<int>> blocks;
  for (int i = 0; i < d; ++i) blocks[weights_[i]].push_back(i);
  std::map<WeightCoords, CoordSolver> solvers;
  for (const auto& [wt, idxs] : blocks) {
    std::vector<SparseVec> rows;
    for (int i : idxs) rows.push_back(basis[i].vec);
    solvers.emplace(wt, CoordSolver(rows, static_cast<int>(pow_ll(n, nslots))));
  }

  action_.resize(static_cast<std::size_t>(lie_->dim()) * d);
  for (int g = 0; g < lie_->dim(); ++g) {
    WeightCoords shift = lie_->weight(g);
    for (int col = 0; col < d; ++col) {
      SparseVec img = apply_ambient(*lie_, g, n, nslots, basis[col].vec);
      if (img.empty()) continue;
      WeightCoords wt = weights_[col];
      for (int j = 0; j < l; ++j) wt[j] += shift[j];
      auto bit = blocks.find(wt);
      if (bit == blocks.end())
        throw std::logic_error("image weight outside module");
      auto coords = solvers.at(wt).coords(img);
      SparseVec out;
      for (std::size_t t = 0; t < coords.size(); ++t)
        if (coords[t] != 0) out.set(bit->second[t], coords[t]);
      action_[g * d + col] = std::move(out);
    }
  }

  gram_.resize(static_cast<std::size_t>(d) * d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat v = basis[i].vec.dot(basis[j].vec);
      gram_[i * d + j] = v;
      gram_[j * d + i] = v;
    }
}

}  // namespace ggc
