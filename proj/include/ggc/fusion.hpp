#ifndef GGC_FUSION_HPP
#define GGC_FUSION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ggc/rootsys.hpp"

namespace ggc {

// Level-k fusion product of [mu][nu], computed by reflecting the classical
// tensor decomposition into the level-(k + h_dual) affine alcove with signs.
// Throws std::invalid_argument if a weight is outside P_+^k.
std::map<DominantWeight, long long> kac_walton_product(
    const RootSystemData& rs, int k, const DominantWeight& mu,
    const DominantWeight& nu);

// Same numbers from the Verlinde S-matrix in high-precision floating point
// (independent oracle).  Throws std::runtime_error if the rounding residue
// exceeds 1e-6.
std::map<DominantWeight, long long> smatrix_fusion(const RootSystemData& rs,
                                                   int k,
                                                   const DominantWeight& mu,
                                                   const DominantWeight& nu);

// Level-k Verlinde algebra over the basis P_+^k.
class FusionTable {
 public:
  FusionTable(std::shared_ptr<const RootSystemData> rs, int k);

  const RootSystemData& root_system() const { return *rs_; }
  int level() const { return k_; }
  const std::vector<DominantWeight>& basis() const { return basis_; }
  int index_of(const DominantWeight& w) const;
  int unit_index() const { return unit_; }
  int dual_index(int i) const { return dual_[i]; }

  long long constant(int mu, int nu, int lambda) const {
    return table_[(mu * size() + nu) * size() + lambda];
  }
  int size() const { return static_cast<int>(basis_.size()); }

  // coefficient vector of [mu] . v
  std::vector<long long> multiply(int mu, const std::vector<long long>& v) const;

  // N_{mu_1,...,mu_n}^{lambda; k}
  long long npoint_coefficient(const std::vector<DominantWeight>& mus,
                               const DominantWeight& lambda) const;

  // sum over tuples of N * prod dim V_{mu_i}; the predicted dim A_u(lambda).
  long long gg_dimension(const DominantWeight& lambda, int n) const;

  struct AxiomReport {
    bool ok = true;
    std::string detail;
  };
  // unit, symmetry, duality and associativity checks; exact.
  AxiomReport check_axioms() const;

  // Exact agreement with the S-matrix oracle over all pairs.
  bool matches_smatrix() const;

  std::string to_tsv() const;
  std::string to_json() const;

 private:
  std::shared_ptr<const RootSystemData> rs_;
  int k_;
  std::vector<DominantWeight> basis_;
  std::vector<long long> dims_;
  std::vector<int> dual_;
  int unit_ = 0;
  std::vector<long long> table_;
};

}  // namespace ggc

#endif
