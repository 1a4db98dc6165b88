#ifndef GGC_FINMOD_HPP
#define GGC_FINMOD_HPP

#include <map>
#include <memory>
#include <vector>

#include "ggc/liealg.hpp"
#include "ggc/span.hpp"

namespace ggc {

// Explicit model of the irreducible g-module V_lambda, built as the cyclic
// span of the highest weight tensor inside a tensor power of the defining
// representation.  Gives exact action matrices for every basis element of g
// and the contravariant form on the chosen basis.
class FiniteModule {
 public:
  FiniteModule(std::shared_ptr<const LieAlgebra> lie, DominantWeight lambda);

  const LieAlgebra& algebra() const { return *lie_; }
  const DominantWeight& highest_weight() const { return lambda_; }

  int dim() const { return static_cast<int>(weights_.size()); }
  int highest_index() const { return 0; }
  const WeightCoords& weight_of(int i) const { return weights_[i]; }

  // Column i of the action of basis element g, over the module basis.
  const SparseVec& act(int g, int i) const {
    return action_[g * dim() + i];
  }

  // Contravariant form on the basis.
  const Rat& gram(int i, int j) const { return gram_[i * dim() + j]; }

 private:
  std::shared_ptr<const LieAlgebra> lie_;
  DominantWeight lambda_;
  std::vector<WeightCoords> weights_;
  std::vector<SparseVec> action_;  // [g * dim + col]
  std::vector<Rat> gram_;
};

}  // namespace ggc

#endif
