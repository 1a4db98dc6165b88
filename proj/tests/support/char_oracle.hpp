#ifndef GGC_TESTS_CHAR_ORACLE_HPP
#define GGC_TESTS_CHAR_ORACLE_HPP

#include <map>
#include <vector>

#include "ggc/rootsys.hpp"

// Test-only oracle: the Weyl-Kac character of the integrable module
// L_lambda at level k, specialized to the energy grading.  Computed from the
// numerator/denominator formula (affine Weyl orbit over the denominator
// product), fully independent of the Shapovalov construction in the library.
namespace ggc_test {

struct GradedCharacter {
  // by_weight[d] maps absolute finite weights to multiplicities at energy d
  std::vector<std::map<ggc::WeightCoords, long long>> by_weight;
  std::vector<long long> dims;
};

GradedCharacter weyl_kac_character(const ggc::RootSystemData& rs, int k,
                                   const ggc::DominantWeight& lambda, int D);

}  // namespace ggc_test

#endif
