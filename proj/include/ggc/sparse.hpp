#ifndef GGC_SPARSE_HPP
#define GGC_SPARSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ggc/rational.hpp"

namespace ggc {

// Sparse vector over Q: terms sorted by index, no stored zeros.
class SparseVec {
 public:
  using Term = std::pair<std::int32_t, Rat>;

  SparseVec() = default;
  static SparseVec unit(std::int32_t i, Rat c = Rat(1));

  bool empty() const { return terms_.empty(); }
  std::size_t nnz() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Lowest-index term; vector must be nonzero.
  const Term& leading() const { return terms_.front(); }

  Rat coeff(std::int32_t i) const;
  void set(std::int32_t i, const Rat& c);

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec& operator*=(const Rat& c);

  // this += c * o
  void axpy(const Rat& c, const SparseVec& o);

  Rat dot(const SparseVec& o) const;

  bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }

  // Scales the vector so entries become coprime integers with positive
  // leading coefficient.  Keeps elimination coefficients small.
  void strip_content();

 private:
  std::vector<Term> terms_;
};

inline SparseVec operator+(SparseVec a, const SparseVec& b) { a += b; return a; }
inline SparseVec operator-(SparseVec a, const SparseVec& b) { a -= b; return a; }
inline SparseVec operator*(const Rat& c, SparseVec v) { v *= c; return v; }

}  // namespace ggc

#endif
