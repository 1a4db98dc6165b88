#ifndef GGC_ROOTSYS_HPP
#define GGC_ROOTSYS_HPP

#include <map>
#include <string>
#include <vector>

#include "ggc/matrix.hpp"
#include "ggc/rational.hpp"

namespace ggc {

// Weights are stored by their coordinates in the fundamental-weight basis.
using WeightCoords = std::vector<int>;

struct DominantWeight {
  WeightCoords coords;

  bool operator==(const DominantWeight& o) const { return coords == o.coords; }
  bool operator<(const DominantWeight& o) const { return coords < o.coords; }
};

std::string weight_to_string(const WeightCoords& w);

// Finite-dimensional data of a simple Lie algebra of type A_l: Cartan matrix,
// roots, invariant form normalized so that (theta, theta) = 2, Weyl group,
// and the standard weight combinatorics (Weyl dimension, Freudenthal
// multiplicities, Klimyk tensor decomposition).
//
// Everything is immutable after construction and safe to share.
class RootSystemData {
 public:
  // Accepts labels "A1", "A2", ... (A series only).
  static RootSystemData make(const std::string& type_label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Coordinates of the i-th simple root in the omega basis (row i of the
  // Cartan matrix).
  const WeightCoords& simple_root(int i) const { return simple_roots_[i]; }
  const std::vector<WeightCoords>& positive_roots() const { return pos_roots_; }
  const WeightCoords& highest_root() const { return theta_; }
  const WeightCoords& rho() const { return rho_; }
  int dual_coxeter() const { return dual_coxeter_; }

  // Invariant bilinear form on the weight space, (theta, theta) = 2.
  Rat ip(const WeightCoords& a, const WeightCoords& b) const;

  bool is_dominant(const WeightCoords& w) const;
  // (w, theta) <= k test for level membership.
  bool in_level_alcove(const WeightCoords& w, int k) const;

  std::vector<DominantWeight> dominant_weights_at_level(int k) const;

  long long weyl_dim(const DominantWeight& w) const;
  DominantWeight dual_weight(const DominantWeight& w) const;

  // Full multiplicity function of V_lambda, keyed by weight coordinates.
  std::map<WeightCoords, long long> weight_multiplicities(
      const DominantWeight& lambda) const;

  // Klimyk decomposition of V_lambda (x) V_mu into irreducibles.
  std::map<DominantWeight, long long> tensor_decompose(
      const DominantWeight& lambda, const DominantWeight& mu) const;

  // Weyl group as matrices acting on omega coordinates, with sign characters.
  struct WeylElement {
    std::vector<std::vector<int>> mat;
    int sign;
  };
  const std::vector<WeylElement>& weyl_group() const;

  WeightCoords apply_weyl(const WeylElement& w, const WeightCoords& c) const;
  WeightCoords simple_reflection(int i, const WeightCoords& c) const;

  // Reflects c into the closure of the dominant chamber, tracking the parity
  // of the reflections used.
  struct Dominated {
    WeightCoords coords;
    int sign;
  };
  Dominated dominate(const WeightCoords& c) const;

 private:
  RootSystemData() = default;

  std::string label_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<WeightCoords> simple_roots_;
  std::vector<WeightCoords> pos_roots_;
  WeightCoords theta_;
  WeightCoords rho_;
  int dual_coxeter_ = 0;
  DenseMatrix form_;  // (omega_i, omega_j)
  mutable std::vector<WeylElement> weyl_;  // built lazily
};

}  // namespace ggc

#endif
