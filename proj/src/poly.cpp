#include "ggc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggc {

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::monomial(int deg, Rat c) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = std::move(c);
  return Poly1(std::move(v));
}

Poly1 Poly1::from_roots(const std::vector<Rat>& roots) {
  Poly1 p = constant(Rat(1));
  for (const auto& r : roots)
    p = p * Poly1({-r, Rat(1)});
  return p;
}

Rat Poly1::eval(const Rat& v) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return Poly1(std::move(out));
}

Poly1 Poly1::operator-(const Poly1& o) const {
  std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return Poly1(std::move(out));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] += c_[i] * o.c_[j];
  }
  return Poly1(std::move(out));
}

Poly1 Poly1::divide_exact(const Poly1& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return Poly1();
  if (degree() < d.degree())
    throw std::invalid_argument("polynomial division is not exact");
  std::vector<Rat> rem = c_;
  std::vector<Rat> q(degree() - d.degree() + 1, Rat(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Rat f = rem[i + d.degree()] / d.c_.back();
    q[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= f * d.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::invalid_argument("polynomial division is not exact");
  return Poly1(std::move(q));
}

void Poly2::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Poly2 Poly2::in_x(const Poly1& p) {
  Poly2 out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeff(i));
  return out;
}

Poly2 Poly2::in_y(const Poly1& p) {
  Poly2 out;
  for (int j = 0; j <= p.degree(); ++j) out.add_term(0, j, p.coeff(j));
  return out;
}

bool Poly2::is_zero() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

Rat Poly2::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  if (j < 0 || j >= static_cast<int>(c_[i].size())) return Rat(0);
  return c_[i][j];
}

void Poly2::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
  if (j >= static_cast<int>(c_[i].size())) c_[i].resize(j + 1, Rat(0));
  c_[i][j] += c;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 out = *this;
  for (int i = 0; i < static_cast<int>(o.c_.size()); ++i)
    for (int j = 0; j < static_cast<int>(o.c_[i].size()); ++j)
      out.add_term(i, j, o.c_[i][j]);
  out.trim();
  return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 out = *this;
  for (int i = 0; i < static_cast<int>(o.c_.size()); ++i)
    for (int j = 0; j < static_cast<int>(o.c_[i].size()); ++j)
      out.add_term(i, j, -o.c_[i][j]);
  out.trim();
  return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 out;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    for (int j = 0; j < static_cast<int>(c_[i].size()); ++j) {
      if (c_[i][j] == 0) continue;
      for (int p = 0; p < static_cast<int>(o.c_.size()); ++p)
        for (int q = 0; q < static_cast<int>(o.c_[p].size()); ++q)
          out.add_term(i + p, j + q, c_[i][j] * o.c_[p][q]);
    }
  out.trim();
  return out;
}

bool Poly2::operator==(const Poly2& o) const { return (*this - o).is_zero(); }

Poly2 phi_map(const Poly1& f) {
  Poly2 out;
  for (int r = 0; r <= f.degree(); ++r) {
    Rat b = f.coeff(r);
    if (b == 0) continue;
    for (int i = 0; i <= r; ++i) out.add_term(i, r - i, b);
  }
  return out;
}

}  // namespace ggc
