#include "ggc/fusion.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include <boost/math/constants/constants.hpp>

namespace ggc {

namespace {

void require_level_weight(const RootSystemData& rs, int k,
                          const DominantWeight& w) {
  if (!rs.is_dominant(w.coords) || !rs.in_level_alcove(w.coords, k))
    throw std::invalid_argument("weight outside P_+^k: " +
                                weight_to_string(w.coords));
}

struct Cx {
  BigFloat re, im;
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cx conj() const { return {re, -im}; }
  BigFloat norm2() const { return re * re + im * im; }
};

Cx cx_div(const Cx& a, const Cx& b) {
  BigFloat n = b.norm2();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

// exp(-2 pi i t)
Cx unit_phase(const Rat& t) {
  BigFloat x = BigFloat(rat_num(t).str()) / BigFloat(rat_den(t).str());
  BigFloat ang = -2 * boost::math::constants::pi<BigFloat>() * x;
  return {cos(ang), sin(ang)};
}

}  // namespace

std::map<DominantWeight, long long> kac_walton_product(
    const RootSystemData& rs, int k, const DominantWeight& mu,
    const DominantWeight& nu) {
  require_level_weight(rs, k, mu);
  require_level_weight(rs, k, nu);
  const int kappa = k + rs.dual_coxeter();
  const auto& theta = rs.highest_root();

  std::map<DominantWeight, long long> out;
  for (const auto& [xi, m] : rs.tensor_decompose(mu, nu)) {
    WeightCoords cur = xi.coords;
    for (auto& c : cur) ++c;  // + rho
    int sign = 1;
    bool wall = false;
    for (int guard = 0;; ++guard) {
      if (guard > 10000)
        throw std::logic_error("alcove reflection failed to terminate");
      int neg = -1;
      for (int i = 0; i < rs.rank(); ++i) {
        if (cur[i] == 0) {
          wall = true;
          break;
        }
        if (cur[i] < 0) {
          neg = i;
          break;
        }
      }
      if (wall) break;
      if (neg >= 0) {
        cur = rs.simple_reflection(neg, cur);
        sign = -sign;
        continue;
      }
      Rat level = rs.ip(cur, theta);
      if (level == kappa) {
        wall = true;
        break;
      }
      if (level < kappa) break;
      // affine reflection about (x, theta) = kappa
      Rat excess = level - Rat(kappa);
      if (rat_den(excess) != 1)
        throw std::logic_error("non-integral affine reflection");
      long long e = excess.convert_to<long long>();
      for (int i = 0; i < rs.rank(); ++i)
        cur[i] -= static_cast<int>(e) * theta[i];
      sign = -sign;
    }
    if (wall) continue;
    for (auto& c : cur) --c;  // - rho
    out[DominantWeight{cur}] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
      continue;
    }
    if (it->second < 0)
      throw std::logic_error("Kac-Walton produced a negative coefficient");
    ++it;
  }
  return out;
}

std::map<DominantWeight, long long> smatrix_fusion(const RootSystemData& rs,
                                                   int k,
                                                   const DominantWeight& mu,
                                                   const DominantWeight& nu) {
  require_level_weight(rs, k, mu);
  require_level_weight(rs, k, nu);
  const int kappa = k + rs.dual_coxeter();
  auto basis = rs.dominant_weights_at_level(k);
  const auto& W = rs.weyl_group();

  // Unnormalized S-matrix entries via Weyl character sums at the rational
  // points (sigma + rho)/kappa; ratios chi = S/S_0 make the normalization
  // constant drop out.
  auto stilde = [&](const WeightCoords& a, const WeightCoords& b) {
    Cx s{BigFloat(0), BigFloat(0)};
    WeightCoords ar = a, br = b;
    for (auto& c : ar) ++c;
    for (auto& c : br) ++c;
    for (const auto& w : W) {
      auto wa = rs.apply_weyl(w, ar);
      Rat t = rs.ip(wa, br) / Rat(kappa);
      Cx ph = unit_phase(t);
      if (w.sign < 0)
        s = s - ph;
      else
        s = s + ph;
    }
    return s;
  };

  const int nb = static_cast<int>(basis.size());
  int mu_i = -1, nu_i = -1, unit_i = -1;
  for (int i = 0; i < nb; ++i) {
    if (basis[i] == mu) mu_i = i;
    if (basis[i] == nu) nu_i = i;
    if (std::all_of(basis[i].coords.begin(), basis[i].coords.end(),
                    [](int c) { return c == 0; }))
      unit_i = i;
  }

  // chi[t][sigma] = S_{t sigma} / S_{0 sigma}
  std::vector<std::vector<Cx>> chi(nb, std::vector<Cx>(nb));
  for (int s = 0; s < nb; ++s) {
    Cx s0 = stilde(basis[unit_i].coords, basis[s].coords);
    for (int t = 0; t < nb; ++t)
      chi[t][s] = cx_div(stilde(basis[t].coords, basis[s].coords), s0);
  }
  std::vector<BigFloat> weight(nb);
  for (int s = 0; s < nb; ++s) {
    BigFloat tot(0);
    for (int t = 0; t < nb; ++t) tot += chi[t][s].norm2();
    weight[s] = 1 / tot;
  }

  std::map<DominantWeight, long long> out;
  const BigFloat tol("1e-6");
  for (int lam = 0; lam < nb; ++lam) {
    Cx acc{BigFloat(0), BigFloat(0)};
    for (int s = 0; s < nb; ++s) {
      Cx term = chi[mu_i][s] * chi[nu_i][s] * chi[lam][s].conj();
      acc = acc + Cx{term.re * weight[s], term.im * weight[s]};
    }
    BigFloat rounded = round(acc.re);
    if (abs(acc.re - rounded) > tol || abs(acc.im) > tol)
      throw std::runtime_error(
          "S-matrix fusion rounding residue above tolerance");
    long long n = rounded.convert_to<long long>();
    if (n != 0) out[basis[lam]] = n;
  }
  return out;
}

FusionTable::FusionTable(std::shared_ptr<const RootSystemData> rs, int k)
    : rs_(std::move(rs)), k_(k) {
  if (k < 0) throw std::invalid_argument("negative level");
  basis_ = rs_->dominant_weights_at_level(k);
  const int n = size();
  dims_.resize(n);
  dual_.resize(n);
  for (int i = 0; i < n; ++i) {
    dims_[i] = rs_->weyl_dim(basis_[i]);
    dual_[i] = index_of(rs_->dual_weight(basis_[i]));
    if (std::all_of(basis_[i].coords.begin(), basis_[i].coords.end(),
                    [](int c) { return c == 0; }))
      unit_ = i;
  }
  table_.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto prod = kac_walton_product(*rs_, k, basis_[i], basis_[j]);
      for (const auto& [lam, c] : prod) {
        int l = index_of(lam);
        table_[(i * n + j) * n + l] = c;
        table_[(j * n + i) * n + l] = c;
      }
    }
}

int FusionTable::index_of(const DominantWeight& w) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
  if (it == basis_.end() || !(*it == w))
    throw std::invalid_argument("weight outside P_+^k: " +
                                weight_to_string(w.coords));
  return static_cast<int>(it - basis_.begin());
}

std::vector<long long> FusionTable::multiply(
    int mu, const std::vector<long long>& v) const {
  std::vector<long long> out(size(), 0);
  for (int nu = 0; nu < size(); ++nu) {
    if (!v[nu]) continue;
    for (int lam = 0; lam < size(); ++lam)
      out[lam] += v[nu] * constant(mu, nu, lam);
  }
  return out;
}

long long FusionTable::npoint_coefficient(
    const std::vector<DominantWeight>& mus, const DominantWeight& lambda) const {
  if (mus.empty()) throw std::invalid_argument("n-point product needs n >= 1");
  std::vector<long long> v(size(), 0);
  v[index_of(mus[0])] = 1;
  for (std::size_t t = 1; t < mus.size(); ++t) v = multiply(index_of(mus[t]), v);
  return v[index_of(lambda)];
}

long long FusionTable::gg_dimension(const DominantWeight& lambda, int n) const {
  if (n < 1) throw std::invalid_argument("gg_dimension needs n >= 1");
  int lam = index_of(lambda);
  // fold the dimension element Dim = sum_mu dim(V_mu) [mu] n times
  std::vector<long long> v(size(), 0);
  for (int i = 0; i < size(); ++i) v[i] = dims_[i];
  for (int t = 1; t < n; ++t) {
    std::vector<long long> next(size(), 0);
    for (int mu = 0; mu < size(); ++mu)
      for (int nu = 0; nu < size(); ++nu) {
        if (!v[nu]) continue;
        long long w = dims_[mu] * v[nu];
        for (int l = 0; l < size(); ++l)
          next[l] += w * constant(mu, nu, l);
      }
    v = std::move(next);
  }
  return v[lam];
}

FusionTable::AxiomReport FusionTable::check_axioms() const {
  const int n = size();
  for (int mu = 0; mu < n; ++mu)
    for (int lam = 0; lam < n; ++lam) {
      if (constant(mu, unit_, lam) != (mu == lam ? 1 : 0))
        return {false, "unit axiom failed"};
      if (constant(mu, lam, unit_) != (lam == dual_[mu] ? 1 : 0))
        return {false, "duality axiom failed"};
    }
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      for (int rho = 0; rho < n; ++rho)
        for (int tau = 0; tau < n; ++tau) {
          long long a = 0, b = 0;
          for (int s = 0; s < n; ++s) {
            a += constant(mu, nu, s) * constant(s, rho, tau);
            b += constant(nu, rho, s) * constant(mu, s, tau);
          }
          if (a != b) return {false, "associativity failed"};
        }
  return {true, "unit, symmetry, duality, associativity verified"};
}

bool FusionTable::matches_smatrix() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j) {
      auto oracle = smatrix_fusion(*rs_, k_, basis_[i], basis_[j]);
      for (int l = 0; l < size(); ++l) {
        long long c = constant(i, j, l);
        auto it = oracle.find(basis_[l]);
        long long o = it == oracle.end() ? 0 : it->second;
        if (c != o) return false;
      }
    }
  return true;
}

std::string FusionTable::to_tsv() const {
  std::string s = "mu\tnu\tlambda\tN\n";
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (int l = 0; l < size(); ++l) {
        long long c = constant(i, j, l);
        if (!c) continue;
        s += weight_to_string(basis_[i].coords) + "\t" +
             weight_to_string(basis_[j].coords) + "\t" +
             weight_to_string(basis_[l].coords) + "\t" + std::to_string(c) +
             "\n";
      }
  return s;
}

std::string FusionTable::to_json() const {
  nlohmann::json j;
  j["algebra"] = rs_->label();
  j["level"] = k_;
  nlohmann::json b = nlohmann::json::array();
  for (const auto& w : basis_) b.push_back(w.coords);
  j["basis"] = b;
  nlohmann::json cs = nlohmann::json::array();
  for (int i = 0; i < size(); ++i)
    for (int p = 0; p < size(); ++p)
      for (int l = 0; l < size(); ++l) {
        long long c = constant(i, p, l);
        if (!c) continue;
        nlohmann::json e;
        e["mu"] = basis_[i].coords;
        e["nu"] = basis_[p].coords;
        e["lambda"] = basis_[l].coords;
        e["value"] = c;
        cs.push_back(e);
      }
  j["constants"] = cs;
  return j.dump(2);
}

}  // namespace ggc
