#include "support/char_oracle.hpp"

#include <stdexcept>

namespace ggc_test {

using ggc::DominantWeight;
using ggc::Rat;
using ggc::RootSystemData;
using ggc::WeightCoords;

namespace {

using WPoly = std::map<WeightCoords, long long>;
using Series = std::vector<WPoly>;  // index = energy degree

void wp_add(WPoly& a, const WeightCoords& w, long long c) {
  if (!c) return;
  auto it = a.find(w);
  if (it == a.end()) {
    a.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

WPoly wp_mul(const WPoly& a, const WPoly& b) {
  WPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      WeightCoords w = wa;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
      wp_add(out, w, ca * cb);
    }
  return out;
}

Series ser_mul(const Series& a, const Series& b, int D) {
  Series out(D + 1);
  for (int i = 0; i <= D; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; i + j <= D; ++j) {
      if (b[j].empty()) continue;
      for (const auto& [w, c] : wp_mul(a[i], b[j])) wp_add(out[i + j], w, c);
    }
  }
  return out;
}

// exact division by (1 - e^{-alpha}); throws if not divisible
WPoly divide_linear(const RootSystemData& rs, WPoly p,
                    const WeightCoords& alpha) {
  WPoly out;
  long long guard = 0;
  while (!p.empty()) {
    if (++guard > 2000000)
      throw std::logic_error("character division failed to terminate");
    // pick the term with maximal (mu, alpha), lexicographically largest
    auto best = p.begin();
    Rat best_ip = rs.ip(best->first, alpha);
    for (auto it = std::next(p.begin()); it != p.end(); ++it) {
      Rat v = rs.ip(it->first, alpha);
      if (v > best_ip || (v == best_ip && it->first > best->first)) {
        best = it;
        best_ip = v;
      }
    }
    WeightCoords mu = best->first;
    long long c = best->second;
    wp_add(out, mu, c);
    wp_add(p, mu, -c);
    WeightCoords lower = mu;
    for (std::size_t i = 0; i < lower.size(); ++i) lower[i] -= alpha[i];
    wp_add(p, lower, c);
  }
  return out;
}

}  // namespace

GradedCharacter weyl_kac_character(const RootSystemData& rs, int k,
                                   const DominantWeight& lambda, int D) {
  const int l = rs.rank();
  const int kappa = k + rs.dual_coxeter();
  const auto& W = rs.weyl_group();

  WeightCoords lr = lambda.coords;
  for (auto& c : lr) ++c;  // lambda + rho

  // Numerator: sum over w = t_beta w_f of the affine Weyl group, with
  // e^{w(Lambda+rho) - (Lambda+rho)} specialized to (finite weight, q-degree).
  Series num(D + 1);
  const int B = D + k + 6;
  std::vector<int> c(l, -B);
  for (;;) {
    // beta = sum c_i alpha_i
    WeightCoords beta(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) beta[j] += c[i] * rs.cartan()[i][j];
    Rat bb = rs.ip(beta, beta);
    for (const auto& wf : W) {
      WeightCoords a = rs.apply_weyl(wf, lr);
      Rat deg = rs.ip(a, beta) + Rat(kappa) * bb / 2;
      if (ggc::rat_den(deg) != 1) throw std::logic_error("non-integral degree");
      long long d = deg.convert_to<long long>();
      if (d < 0 || d > D) continue;
      WeightCoords nu(l);
      for (int i = 0; i < l; ++i) nu[i] = a[i] + kappa * beta[i] - lr[i];
      wp_add(num[static_cast<int>(d)], nu, wf.sign);
    }
    int pos = 0;
    while (pos < l && c[pos] == B) c[pos++] = -B;
    if (pos == l) break;
    ++c[pos];
  }

  // Denominator: prod over positive affine roots of (1 - e^{-root}), with
  // imaginary roots n delta carrying multiplicity l.
  Series den(D + 1);
  den[0][WeightCoords(l, 0)] = 1;
  auto mul_factor = [&](int qdeg, const WeightCoords& wshift) {
    Series f(D + 1);
    f[0][WeightCoords(l, 0)] = 1;
    if (qdeg <= D) wp_add(f[qdeg], wshift, -1);
    den = ser_mul(den, f, D);
  };
  WeightCoords zero(l, 0);
  for (const auto& alpha : rs.positive_roots()) {
    WeightCoords neg = alpha;
    for (auto& x : neg) x = -x;
    mul_factor(0, neg);
  }
  for (int n = 1; n <= D; ++n) {
    for (int i = 0; i < l; ++i) mul_factor(n, zero);
    for (const auto& alpha : rs.positive_roots()) {
      WeightCoords neg = alpha;
      for (auto& x : neg) x = -x;
      mul_factor(n, neg);
      mul_factor(n, alpha);
    }
  }

  // Solve ch * den = num degree by degree; den[0] = prod (1 - e^{-alpha}).
  Series ch(D + 1);
  for (int d = 0; d <= D; ++d) {
    WPoly rhs = num[d];
    for (int d2 = 0; d2 < d; ++d2)
      for (const auto& [w, v] : wp_mul(ch[d2], den[d - d2]))
        wp_add(rhs, w, -v);
    for (const auto& alpha : rs.positive_roots())
      rhs = divide_linear(rs, std::move(rhs), alpha);
    ch[d] = std::move(rhs);
  }

  GradedCharacter out;
  out.by_weight.resize(D + 1);
  out.dims.assign(D + 1, 0);
  for (int d = 0; d <= D; ++d) {
    for (const auto& [nu, m] : ch[d]) {
      WeightCoords abs = nu;
      for (int i = 0; i < l; ++i) abs[i] += lambda.coords[i];
      if (m < 0) throw std::logic_error("negative character multiplicity");
      out.by_weight[d][abs] = m;
      out.dims[d] += m;
    }
  }
  return out;
}

}  // namespace ggc_test
