#include "ggc/sparse.hpp"

#include <algorithm>

namespace ggc {

SparseVec SparseVec::unit(std::int32_t i, Rat c) {
  SparseVec v;
  if (c != 0) v.terms_.push_back({i, std::move(c)});
  return v;
}

Rat SparseVec::coeff(std::int32_t i) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), i,
      [](const Term& t, std::int32_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return Rat(0);
}

void SparseVec::set(std::int32_t i, const Rat& c) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), i,
      [](const Term& t, std::int32_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) {
    if (c == 0)
      terms_.erase(it);
    else
      it->second = c;
  } else if (c != 0) {
    terms_.insert(it, {i, c});
  }
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  axpy(Rat(1), o);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  axpy(Rat(-1), o);
  return *this;
}

SparseVec& SparseVec::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

void SparseVec::axpy(const Rat& c, const SparseVec& o) {
  if (c == 0 || o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back({b->first, c * b->second});
      ++b;
    } else {
      Rat v = a->second + c * b->second;
      if (v != 0) out.push_back({a->first, std::move(v)});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  for (; b != be; ++b) out.push_back({b->first, c * b->second});
  terms_ = std::move(out);
}

Rat SparseVec::dot(const SparseVec& o) const {
  Rat s(0);
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

void SparseVec::strip_content() {
  if (terms_.empty()) return;
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(t.second));
    den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(t.second));
  }
  if (num_gcd == 0) return;
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  if (terms_.front().second < 0) scale = -scale;
  *this *= scale;
}

}  // namespace ggc
