#include "ggc/liealg.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace ggc {

namespace {

// Dense traceless matrix helper used only during construction.
using Mat = std::vector<std::vector<long long>>;

Mat to_dense(const std::vector<std::array<int, 3>>& m, int n) {
  Mat d(n, std::vector<long long>(n, 0));
  for (const auto& t : m) d[t[0]][t[1]] += t[2];
  return d;
}

Mat commutator(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0 && b[i][k] == 0) continue;
      for (int j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  return c;
}

}  // namespace

LieAlgebra::LieAlgebra(std::shared_ptr<const RootSystemData> rs)
    : rs_(std::move(rs)) {
  const int l = rs_->rank();
  rank_ = l;
  n_ = l + 1;
  const auto& roots = rs_->positive_roots();
  num_pos_ = static_cast<int>(roots.size());

  // Positive root alpha_i + ... + alpha_j (height-then-start order used by
  // RootSystemData) corresponds to E_{i, j+1}.
  std::vector<std::pair<int, int>> spans;
  for (int h = 0; h < l; ++h)
    for (int i = 0; i + h < l; ++i) spans.push_back({i, i + h + 1});

  auto root_name = [&](int p) {
    auto [i, j] = spans[p];
    if (l == 1) return std::string();
    return "(" + std::to_string(i + 1) + ".." + std::to_string(j + 1) + ")";
  };

  for (int p = 0; p < num_pos_; ++p) {
    auto [i, j] = spans[p];
    names_.push_back("e" + root_name(p));
    mats_.push_back({{{i, j, 1}}});
    weights_.push_back(roots[p]);
  }
  for (int i = 0; i < l; ++i) {
    names_.push_back(l == 1 ? "h" : "h" + std::to_string(i + 1));
    mats_.push_back({{{i, i, 1}, {i + 1, i + 1, -1}}});
    weights_.push_back(WeightCoords(l, 0));
  }
  for (int p = 0; p < num_pos_; ++p) {
    auto [i, j] = spans[p];
    names_.push_back("f" + root_name(p));
    mats_.push_back({{{j, i, 1}}});
    WeightCoords w = roots[p];
    for (auto& x : w) x = -x;
    weights_.push_back(w);
  }
  for (int i = 0; i < l; ++i) simple_pos_.push_back(i);

  const int d = dim();
  omega_.assign(d, 0);
  for (int p = 0; p < num_pos_; ++p) {
    omega_[p] = num_pos_ + l + p;
    omega_[num_pos_ + l + p] = p;
  }
  for (int i = 0; i < l; ++i) omega_[num_pos_ + i] = num_pos_ + i;

  // Brackets: compute matrix commutators and expand over the basis.
  std::vector<Mat> dense;
  dense.reserve(d);
  for (int i = 0; i < d; ++i) dense.push_back(to_dense(mats_[i], n_));

  auto expand = [&](const Mat& m) {
    SparseVec out;
    // off-diagonal entries are e/f coefficients
    for (int p = 0; p < num_pos_; ++p) {
      auto [i, j] = spans[p];
      if (m[i][j]) out.set(p, Rat(m[i][j]));
      if (m[j][i]) out.set(num_pos_ + l + p, Rat(m[j][i]));
    }
    // traceless diagonal: coefficient of h_i is d_1 + ... + d_i
    long long acc = 0;
    for (int i = 0; i < l; ++i) {
      acc += m[i][i];
      if (acc) out.set(num_pos_ + i, Rat(acc));
    }
    return out;
  };

  brackets_.resize(static_cast<std::size_t>(d) * d);
  form_.resize(static_cast<std::size_t>(d) * d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      brackets_[i * d + j] = expand(commutator(dense[i], dense[j]));
      long long tr = 0;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) tr += dense[i][a][b] * dense[j][b][a];
      form_[i * d + j] = Rat(tr);
    }
}

int LieAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown generator: " + name);
}

}  // namespace ggc
