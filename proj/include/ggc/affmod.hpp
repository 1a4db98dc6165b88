#ifndef GGC_AFFMOD_HPP
#define GGC_AFFMOD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ggc/finmod.hpp"
#include "ggc/liealg.hpp"
#include "ggc/matrix.hpp"

namespace ggc {

// One factor x_gen (x) t^{-depth} of a PBW monomial; depth >= 1.
struct PBWFactor {
  std::int16_t gen;
  std::int16_t depth;
  bool operator==(const PBWFactor&) const = default;
};

// Canonical factor order: deeper modes first, ties broken by generator
// index.  All straightening normalizes monomials to weakly increasing
// factor sequences in this order.
inline bool factor_less(const PBWFactor& a, const PBWFactor& b) {
  return a.depth > b.depth || (a.depth == b.depth && a.gen < b.gen);
}
inline bool factor_le(const PBWFactor& a, const PBWFactor& b) {
  return !factor_less(b, a);
}

struct PBWMonomial {
  std::vector<PBWFactor> factors;

  int degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.depth;
    return d;
  }
  bool operator==(const PBWMonomial&) const = default;
};

std::string monomial_to_string(const PBWMonomial& m, const LieAlgebra& lie);

// Element of End(L(<=D)) as sparse columns, with degree-shift bookkeeping.
// `truncated` records whether any image component crossed the cutoff and
// was dropped; downstream span computations must reject such operators.
struct OperatorMatrix {
  int dim = 0;
  int degree_shift = 0;
  bool truncated = false;
  std::vector<SparseVec> cols;

  SparseVec apply(const SparseVec& v) const;
  RationalMatrix to_matrix() const;
};

struct VermaCore;
struct QuotientData;

// Truncation L(<=D) of either the parabolic level-k Verma module W_{lambda,k}
// or its irreducible quotient L_lambda, with exact generator matrices
// obtained by commutator straightening.  Immutable after construction
// (internal caches only grow).
class TruncatedModule {
 public:
  // Empty handle; assign from build_parabolic_verma / shapovalov_radical.
  TruncatedModule() = default;

  bool irreducible() const { return quot_ != nullptr; }

  const LieAlgebra& algebra() const;
  std::shared_ptr<const LieAlgebra> algebra_ptr() const;
  const RootSystemData& root_system() const;
  const DominantWeight& highest_weight() const;
  int level() const;
  int cutoff() const;

  int dim() const;
  int degree_of(int idx) const;
  const WeightCoords& weight_of(int idx) const;
  // PBW monomial labeling basis vector idx (the representative, in the
  // irreducible case) and its V_lambda component.
  const PBWMonomial& monomial_of(int idx) const;
  int finite_part_of(int idx) const;
  int highest_vector() const { return 0; }

  std::vector<long long> graded_dims() const;

  struct ApplyResult {
    SparseVec vec;
    bool clean = true;  // false iff some component crossed the cutoff
  };

  // Action of x_gen (x) t^{power} on a basis vector / a vector.
  // Throws std::invalid_argument for an unknown generator index.
  ApplyResult apply_gen(int gen, int power, int idx) const;
  ApplyResult apply_gen_vec(int gen, int power, const SparseVec& v) const;

  OperatorMatrix operator_matrix(int gen, int power) const;

  // Contravariant (Shapovalov) form of two basis vectors.
  Rat contravariant(int i, int j) const;

  // Irreducible mode: image of a Verma vector in the quotient.  Vanishes
  // exactly on the radical.
  SparseVec project_from_verma(const SparseVec& v) const;
  const TruncatedModule& verma() const;

 private:
  friend TruncatedModule build_parabolic_verma(
      std::shared_ptr<const LieAlgebra> lie, const DominantWeight& lambda,
      int k, int D);
  friend TruncatedModule shapovalov_radical(const TruncatedModule& verma);

  std::shared_ptr<VermaCore> core_;
  std::shared_ptr<QuotientData> quot_;
  std::shared_ptr<const TruncatedModule> verma_;
};

// Basis: all canonical PBW monomials of degree <= D over the creation
// generators, tensored with a basis of V_lambda.  K acts by k, g (x) tC[t]
// kills V_lambda, g (x) 1 acts through V_lambda.
TruncatedModule build_parabolic_verma(std::shared_ptr<const LieAlgebra> lie,
                                      const DominantWeight& lambda, int k,
                                      int D);

// Quotient by the radical of the contravariant form, computed blockwise per
// (degree, h-weight).  Graded dimensions match the Weyl-Kac character.
TruncatedModule shapovalov_radical(const TruncatedModule& verma);

// Graded-dimension dump used for cross-run caching by the CLI.
std::string graded_dims_json(const TruncatedModule& m);
// True iff the dump describes the same (algebra, level, weight, cutoff)
// with identical dimensions.
bool graded_dims_match_json(const TruncatedModule& m, const std::string& text);

}  // namespace ggc

#endif
