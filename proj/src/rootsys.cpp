#include "ggc/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ggc {

std::string weight_to_string(const WeightCoords& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

RootSystemData RootSystemData::make(const std::string& type_label) {
  if (type_label.size() < 2 || type_label[0] != 'A')
    throw std::invalid_argument("unsupported algebra type: " + type_label);
  int l = 0;
  try {
    l = std::stoi(type_label.substr(1));
  } catch (...) {
    throw std::invalid_argument("unsupported algebra type: " + type_label);
  }
  if (l < 1 || l > 9)
    throw std::invalid_argument("rank out of supported range: " + type_label);

  RootSystemData rs;
  rs.label_ = type_label;
  rs.rank_ = l;
  rs.cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) {
    rs.cartan_[i][i] = 2;
    if (i + 1 < l) {
      rs.cartan_[i][i + 1] = -1;
      rs.cartan_[i + 1][i] = -1;
    }
  }
  for (int i = 0; i < l; ++i)
    rs.simple_roots_.push_back(WeightCoords(rs.cartan_[i].begin(), rs.cartan_[i].end()));

  // Positive roots alpha_i + ... + alpha_j, ordered by height then start.
  for (int h = 0; h < l; ++h)
    for (int i = 0; i + h < l; ++i) {
      WeightCoords r(l, 0);
      for (int t = i; t <= i + h; ++t)
        for (int c = 0; c < l; ++c) r[c] += rs.cartan_[t][c];
      rs.pos_roots_.push_back(r);
    }
  rs.theta_ = rs.pos_roots_.back();
  rs.rho_.assign(l, 1);

  // (omega_i, omega_j) = (C^{-1})_{ij} for simply-laced normalization.
  DenseMatrix c(l, std::vector<Rat>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c[i][j] = Rat(rs.cartan_[i][j]);
  rs.form_ = dense_inverse(c);

  if (rs.ip(rs.theta_, rs.theta_) != 2)
    throw std::logic_error("root normalization failed: (theta,theta) != 2");
  Rat h_dual = rs.ip(rs.rho_, rs.theta_) + 1;
  rs.dual_coxeter_ = static_cast<int>(h_dual.convert_to<long long>());
  return rs;
}

Rat RootSystemData::ip(const WeightCoords& a, const WeightCoords& b) const {
  Rat s(0);
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j]) s += Rat(a[i]) * form_[i][j] * Rat(b[j]);
  }
  return s;
}

bool RootSystemData::is_dominant(const WeightCoords& w) const {
  return std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; });
}

bool RootSystemData::in_level_alcove(const WeightCoords& w, int k) const {
  return ip(w, theta_) <= k;
}

std::vector<DominantWeight> RootSystemData::dominant_weights_at_level(
    int k) const {
  if (k < 0) throw std::invalid_argument("negative level");
  std::vector<DominantWeight> out;
  WeightCoords cur(rank_, 0);
  // (omega_i, theta) = 1 in type A, but enumerate via the form to stay
  // generic over future extensions.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == rank_) {
      if (in_level_alcove(cur, k)) out.push_back({cur});
      return;
    }
    for (int s = 0;; ++s) {
      cur[pos] = s;
      bool feasible = true;
      {
        WeightCoords partial(rank_, 0);
        for (int i = 0; i <= pos; ++i) partial[i] = cur[i];
        feasible = in_level_alcove(partial, k);
      }
      if (!feasible) break;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

long long RootSystemData::weyl_dim(const DominantWeight& w) const {
  WeightCoords lr(rank_);
  for (int i = 0; i < rank_; ++i) lr[i] = w.coords[i] + 1;
  Rat d(1);
  for (const auto& a : pos_roots_) d *= ip(lr, a) / ip(rho_, a);
  if (rat_den(d) != 1) throw std::logic_error("Weyl dimension not integral");
  return d.convert_to<long long>();
}

DominantWeight RootSystemData::dual_weight(const DominantWeight& w) const {
  WeightCoords neg(rank_);
  for (int i = 0; i < rank_; ++i) neg[i] = -w.coords[i];
  auto d = dominate(neg);
  return {d.coords};
}

WeightCoords RootSystemData::simple_reflection(int i,
                                               const WeightCoords& c) const {
  WeightCoords out = c;
  int ci = c[i];
  if (ci)
    for (int j = 0; j < rank_; ++j) out[j] -= ci * cartan_[i][j];
  return out;
}

RootSystemData::Dominated RootSystemData::dominate(
    const WeightCoords& c) const {
  WeightCoords cur = c;
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i) {
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return {cur, sign};
    cur = simple_reflection(neg, cur);
    sign = -sign;
  }
}

const std::vector<RootSystemData::WeylElement>& RootSystemData::weyl_group()
    const {
  if (!weyl_.empty()) return weyl_;
  auto id = std::vector<std::vector<int>>(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) id[i][i] = 1;
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<WeylElement> queue{{id, 1}};
  seen.insert(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto w = queue[head];
    for (int i = 0; i < rank_; ++i) {
      // matrix of s_i composed with w: columns are images of basis weights
      std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 0));
      for (int col = 0; col < rank_; ++col) {
        WeightCoords e(rank_, 0);
        for (int r = 0; r < rank_; ++r) e[r] = w.mat[r][col];
        e = simple_reflection(i, e);
        for (int r = 0; r < rank_; ++r) m[r][col] = e[r];
      }
      if (seen.insert(m).second) queue.push_back({m, -w.sign});
    }
  }
  weyl_ = std::move(queue);
  return weyl_;
}

WeightCoords RootSystemData::apply_weyl(const WeylElement& w,
                                        const WeightCoords& c) const {
  WeightCoords out(rank_, 0);
  for (int r = 0; r < rank_; ++r)
    for (int k = 0; k < rank_; ++k) out[r] += w.mat[r][k] * c[k];
  return out;
}

std::map<WeightCoords, long long> RootSystemData::weight_multiplicities(
    const DominantWeight& lambda) const {
  if (!is_dominant(lambda.coords))
    throw std::invalid_argument("weight_multiplicities: weight not dominant");
  const int l = rank_;
  // Bound the depth box: c = C^{-1}(lambda - mu) <= C^{-1} lambda.
  std::vector<int> cmax(l, 0);
  for (int i = 0; i < l; ++i) {
    Rat b(0);
    for (int j = 0; j < l; ++j) b += form_[i][j] * Rat(lambda.coords[j]);
    cmax[i] = static_cast<int>(b.convert_to<double>() + 1e-9);
  }

  struct Cand {
    int depth;
    WeightCoords mu;
  };
  std::vector<Cand> cands;
  std::vector<int> c(l, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == l) {
      WeightCoords mu = lambda.coords;
      int depth = 0;
      for (int i = 0; i < l; ++i) {
        depth += c[i];
        for (int j = 0; j < l; ++j) mu[j] -= c[i] * cartan_[i][j];
      }
      if (is_dominant(mu)) cands.push_back({depth, mu});
      return;
    }
    for (c[pos] = 0; c[pos] <= cmax[pos]; ++c[pos]) self(self, pos + 1);
    c[pos] = 0;
  };
  rec(rec, 0);
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) { return a.depth < b.depth; });

  std::map<WeightCoords, long long> dom_mult;
  WeightCoords lr = lambda.coords;
  for (auto& x : lr) ++x;
  Rat lr2 = ip(lr, lr);

  for (const auto& cand : cands) {
    if (cand.depth == 0) {
      dom_mult[cand.mu] = 1;
      continue;
    }
    Rat num(0);
    for (const auto& alpha : pos_roots_) {
      for (int j = 1;; ++j) {
        WeightCoords nu = cand.mu;
        for (int i = 0; i < l; ++i) nu[i] += j * alpha[i];
        auto dom = dominate(nu);
        auto it = dom_mult.find(dom.coords);
        if (it == dom_mult.end() || it->second == 0) break;
        num += Rat(2) * Rat(it->second) * ip(nu, alpha);
      }
    }
    WeightCoords mr = cand.mu;
    for (auto& x : mr) ++x;
    Rat den = lr2 - ip(mr, mr);
    Rat m = num / den;
    if (rat_den(m) != 1)
      throw std::logic_error("Freudenthal multiplicity not integral");
    long long mult = m.convert_to<long long>();
    if (mult) dom_mult[cand.mu] = mult;
  }

  // Expand dominant multiplicities over Weyl orbits.
  std::map<WeightCoords, long long> full;
  const auto& W = weyl_group();
  for (const auto& [mu, mult] : dom_mult) {
    std::set<WeightCoords> orbit;
    for (const auto& w : W) orbit.insert(apply_weyl(w, mu));
    for (const auto& nu : orbit) full[nu] = mult;
  }
  return full;
}

std::map<DominantWeight, long long> RootSystemData::tensor_decompose(
    const DominantWeight& lambda, const DominantWeight& mu) const {
  if (!is_dominant(lambda.coords) || !is_dominant(mu.coords))
    throw std::invalid_argument("tensor_decompose: weights must be dominant");
  std::map<DominantWeight, long long> out;
  auto mults = weight_multiplicities(mu);
  for (const auto& [nu, m] : mults) {
    WeightCoords xi = lambda.coords;
    for (int i = 0; i < rank_; ++i) xi[i] += nu[i] + 1;  // lambda + nu + rho
    // Signed reflection of xi into the interior of the dominant chamber.
    WeightCoords cur = xi;
    int sign = 1;
    bool wall = false;
    for (;;) {
      int neg = -1;
      for (int i = 0; i < rank_; ++i) {
        if (cur[i] == 0) {
          wall = true;
          break;
        }
        if (cur[i] < 0) {
          neg = i;
          break;
        }
      }
      if (wall || neg < 0) break;
      cur = simple_reflection(neg, cur);
      sign = -sign;
    }
    if (wall) continue;
    for (auto& x : cur) --x;  // subtract rho
    out[DominantWeight{cur}] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else if (it->second < 0)
      throw std::logic_error("Klimyk produced a negative multiplicity");
    else
      ++it;
  }
  return out;
}

}  // namespace ggc
