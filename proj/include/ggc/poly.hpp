#ifndef GGC_POLY_HPP
#define GGC_POLY_HPP

#include <vector>

#include "ggc/rational.hpp"

namespace ggc {

// Dense univariate polynomial over Q.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly1 constant(Rat c) { return Poly1({std::move(c)}); }
  static Poly1 monomial(int deg, Rat c = Rat(1));
  // prod_j (v - roots[j])
  static Poly1 from_roots(const std::vector<Rat>& roots);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& v) const;

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  bool operator==(const Poly1& o) const { return c_ == o.c_; }

  // Exact division; throws std::invalid_argument if not divisible.
  Poly1 divide_exact(const Poly1& d) const;

 private:
  void trim();
  std::vector<Rat> c_;  // c_[i] multiplies v^i
};

// Dense bivariate polynomial over Q, coefficient grid c[i][j] on x^i y^j.
class Poly2 {
 public:
  Poly2() = default;

  static Poly2 zero() { return Poly2(); }
  static Poly2 in_x(const Poly1& p);
  static Poly2 in_y(const Poly1& p);

  bool is_zero() const;
  Rat coeff(int i, int j) const;
  void add_term(int i, int j, const Rat& c);

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  bool operator==(const Poly2& o) const;

  int x_degree() const { return static_cast<int>(c_.size()) - 1; }

 private:
  void trim();
  std::vector<std::vector<Rat>> c_;  // c_[i][j]
};

// phi(sum_r beta_r v^r) = sum_{i,l >= 0} beta_{i+l} x^i y^l.
Poly2 phi_map(const Poly1& f);

}  // namespace ggc

#endif
