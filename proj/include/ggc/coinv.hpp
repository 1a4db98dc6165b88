#ifndef GGC_COINV_HPP
#define GGC_COINV_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggc/fields.hpp"
#include "ggc/fusion.hpp"
#include "ggc/span.hpp"

namespace ggc {

// Echelon span inside L(<=D) with columns ordered by degree descending, so
// that rows with pivot degree <= d form a basis of (span) intersected with
// L(<=d), and quotient representatives can be read off the non-pivot columns.
class DegreeSpan {
 public:
  explicit DegreeSpan(const TruncatedModule& mod);

  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  // residual after reduction, back in module coordinates (supported on
  // non-pivot columns only)
  SparseVec residual(const SparseVec& v) const;

  int rank() const { return span_.rank(); }
  int rank_upto(int d) const;
  // non-pivot module indices of degree <= d, ascending
  std::vector<int> quotient_basis(int d) const;

 private:
  SparseVec permute(const SparseVec& v) const;
  SparseVec unpermute(const SparseVec& v) const;

  const TruncatedModule* mod_;
  std::vector<std::int32_t> perm_, inv_;
  SpanBasis span_;
};

// Provenance of one generating vector, kept for witnesses.
struct GenRecord {
  bool from_ou = false;
  int x_gen = -1;      // O^c: x (x) pi(t^{-1}) t^{-r}
  int r = -1;
  PBWMonomial label;   // O_u: Y_u^{(M)}(A)
  int M = 0;
  int source = -1;     // module basis index of v
  int top_degree = 0;

  std::string describe(const LieAlgebra& lie) const;
};

struct GeneratorFamily {
  DegreeSpan span;
  std::vector<GenRecord> gens;
  std::vector<SparseVec> vecs;  // parallel to gens
};

// Span of (x (x) pi(t^{-1}) t^{-r}) v over the g-basis, r in [0, r_max], and
// basis vectors v, keeping the products that stay fully below d_cap.
// pi(w) = prod_j (w - w_j), with the factor w coming from u_1 = infinity.
GeneratorFamily oc_generators(const TruncatedModule& m, const PointConfig& pc,
                              int d_cap, int r_max = -1);

// Span of Y_u^{(M)}(A) v over labels |A| <= s_max, 0 < M <= M_max, keeping
// truncation-clean images of degree <= d_cap.
GeneratorFamily ou_generators(const TruncatedModule& m, const FieldEngine& eng,
                              const PointConfig& pc, int s_max, int M_max,
                              int d_cap);

struct InclusionResult {
  bool pass = true;
  std::string witness;  // description of the first failing generator
};

struct CoinvariantReport {
  std::string algebra;
  int level = 0;
  WeightCoords weight;
  std::vector<std::string> points;  // inverse coordinates as strings
  int cutoff = 0;
  int s_max = 0, m_max = 0, r_max = 0;

  std::vector<long long> q_series;  // q_d for d = 0..D
  bool stabilized = false;
  int plateau_start = -1;
  long long stabilized_dim = -1;
  long long predicted_dim = -1;
  bool dims_gate = false;   // equality required (distinct points, or A1)
  bool dims_match = false;

  InclusionResult oc_in_ou;  // Lemma-1 direction
  InclusionResult ou_in_oc;  // main-theorem direction

  bool has_multiplicities = false;
  std::vector<std::pair<std::vector<WeightCoords>, long long>> multiplicities;
  long long multiplicity_total = -1;

  bool pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Shared, reusable setup for one (algebra, level, weight, cutoff): the
// truncated irreducible module, vacuum labels, field engine, fusion table.
struct VerifyContext {
  std::shared_ptr<const LieAlgebra> lie;
  TruncatedModule module;
  TruncatedModule vacuum;
  std::unique_ptr<FieldEngine> engine;
  std::unique_ptr<FusionTable> fusion;

  static VerifyContext create(const std::string& algebra, int k,
                              const DominantWeight& lambda, int D, int s_cap);
};

struct VerifyOptions {
  int s_max = -1;  // default: min(D - n, context cap)
  int M_max = -1;  // default: D
  int r_max = -1;  // default: D - n
  bool decompose = true;
};

CoinvariantReport verify_theorem(const VerifyContext& ctx,
                                 const PointConfig& pc,
                                 const VerifyOptions& opt = {});

// The n commuting g-actions on the quotient via evaluation polynomials,
// decomposed by simultaneous highest weight vectors.  Requires pairwise
// distinct points and a stabilized quotient.
std::map<std::vector<WeightCoords>, long long> decompose_gn(
    const TruncatedModule& m, const PointConfig& pc, const DegreeSpan& oc_span,
    int d_star);

}  // namespace ggc

#endif
