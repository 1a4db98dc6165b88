#ifndef GGC_FIELDS_HPP
#define GGC_FIELDS_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggc/affmod.hpp"
#include "ggc/poly.hpp"

namespace ggc {

// Configuration of marked points, stored through the inverse coordinates
// w_j = u_j^{-1}; the first point is always u_1 = infinity (w_1 = 0).
struct PointConfig {
  std::vector<Rat> winv;

  // Throws std::invalid_argument unless the list is nonempty and starts at 0.
  static PointConfig from_inverse_coords(std::vector<Rat> w);

  int n() const { return static_cast<int>(winv.size()); }
  bool pairwise_distinct() const;
  bool all_infinite() const;
};

// Expansion of prod_{j=2}^n (z^{-1} - w_j)^s as sum_p alpha_p z^{-p}.
struct AlphaPoly {
  int s = 0;
  int N = 0;                // (n-1) s
  std::vector<Rat> coeffs;  // size N+1, top coefficient 1

  int min_support() const;
};

AlphaPoly alpha_coeffs(const PointConfig& pc, int s);

// Field labels are PBW monomials a_1 t^{-s_1} ... a_N t^{-s_N} applied to the
// vacuum vector; the weight |A| is the total depth.
struct FieldLabel {
  PBWMonomial mono;
  int weight() const { return mono.degree(); }
};

// Computes coefficients A_(m) of the fields Y(A, z) on a truncated module by
// the reconstruction formula (derivative prefactors on single factors,
// recursive normal ordering on composites), and the point-twisted generators
// Y_u^{(M)}(A).  Results are cached per (label, m, basis vector).
class FieldEngine {
 public:
  // `labels_from` supplies the enumeration basis for O_u generators: the
  // basis monomials of the vacuum module, restricted to weights <= s_max.
  FieldEngine(const TruncatedModule& mod, const TruncatedModule& labels_from,
              int s_max);
  // Engine without an enumeration set (explicit labels only).
  explicit FieldEngine(const TruncatedModule& mod);

  const TruncatedModule& module() const { return mod_; }
  int label_weight_cap() const { return s_max_; }
  const std::vector<FieldLabel>& labels() const { return labels_; }

  using ApplyResult = TruncatedModule::ApplyResult;

  // A_(m) applied to the basis vector idx.
  ApplyResult apply_field(const PBWMonomial& label, int m, int idx) const;
  ApplyResult apply_field_vec(const PBWMonomial& label, int m,
                              const SparseVec& v) const;
  OperatorMatrix field_coefficient(const PBWMonomial& label, int m) const;

  // Y_u^{(M)}(A) = sum_p alpha_p^{(|A|)} A_(-M-p).
  ApplyResult apply_gg(const PBWMonomial& label, int M, const AlphaPoly& alpha,
                       int idx) const;
  OperatorMatrix gg_generator(const PBWMonomial& label, int M,
                              const PointConfig& pc) const;

 private:
  int label_id(const PBWMonomial& label) const;

  const TruncatedModule& mod_;
  int s_max_ = 0;
  std::vector<FieldLabel> labels_;
  mutable std::unordered_map<std::string, int> label_ids_;
  mutable std::vector<PBWMonomial> label_monos_;
  mutable std::unordered_map<std::uint64_t, ApplyResult> memo_;
};

// Constructive solution (p, q) of
//   sum_{l=0}^{N-1} sum_{i=1}^{N-l} alpha_{i+l}^{(s+1)} x^i y^l
//     = prod_{j=2}^n (x - w_j) p(x,y) + prod_{j=2}^n (y - w_j)^s q(x,y),
// obtained by iterated peeling through the phi map.
struct PhiDecomposition {
  Poly2 p;
  Poly2 q;
};

PhiDecomposition phi_decompose(const PointConfig& pc, int s);

// Left-hand side of the identity above, straight from the alpha expansion.
Poly2 phi_decompose_lhs(const PointConfig& pc, int s);
// Exact verification of the identity for a computed decomposition.
bool phi_decomposition_valid(const PointConfig& pc, int s,
                             const PhiDecomposition& d);

}  // namespace ggc

#endif
