#ifndef GGC_LIEALG_HPP
#define GGC_LIEALG_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ggc/rootsys.hpp"
#include "ggc/sparse.hpp"

namespace ggc {

// Concrete realization of the simple Lie algebra of type A_l as sl(l+1):
// basis {e_alpha, h_i, f_alpha} of elementary matrices, bracket structure
// constants, and the invariant trace form, which for type A is exactly the
// form normalized by (theta, theta) = 2.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::shared_ptr<const RootSystemData> rs);

  const RootSystemData& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystemData> root_system_ptr() const { return rs_; }

  int dim() const { return static_cast<int>(names_.size()); }
  int matrix_size() const { return n_; }

  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;

  // Defining-representation matrix of basis element i ((p,q,value) triples).
  const std::vector<std::array<int, 3>>& rep_matrix(int i) const {
    return mats_[i];
  }

  // [x_i, x_j] expanded over the basis.
  const SparseVec& bracket(int i, int j) const {
    return brackets_[i * dim() + j];
  }

  // Invariant form (x_i, x_j); trace form of the defining representation.
  const Rat& form(int i, int j) const { return form_[i * dim() + j]; }

  // Chevalley antiautomorphism on basis indices (e <-> f, h fixed).
  int omega(int i) const { return omega_[i]; }

  // h-weight of basis element i in omega coordinates (root, 0 for Cartan).
  const WeightCoords& weight(int i) const { return weights_[i]; }

  bool is_raising(int i) const { return i < num_pos_; }
  bool is_cartan(int i) const { return i >= num_pos_ && i < num_pos_ + rank_; }
  bool is_lowering(int i) const { return i >= num_pos_ + rank_; }

  // Indices of e_{alpha_i}, f_{alpha_i}, h_i for simple roots, and of the
  // highest-root raising element.
  int e_simple(int i) const { return simple_pos_[i]; }
  int f_simple(int i) const { return num_pos_ + rank_ + simple_pos_[i]; }
  int h_index(int i) const { return num_pos_ + i; }
  int e_theta() const { return static_cast<int>(num_pos_) - 1; }
  int f_theta() const { return dim() - 1; }

 private:
  std::shared_ptr<const RootSystemData> rs_;
  int n_ = 0;     // matrices are n x n
  int rank_ = 0;
  int num_pos_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<std::array<int, 3>>> mats_;
  std::vector<SparseVec> brackets_;
  std::vector<Rat> form_;
  std::vector<int> omega_;
  std::vector<WeightCoords> weights_;
  std::vector<int> simple_pos_;
};

}  // namespace ggc

#endif
