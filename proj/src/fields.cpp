#include "ggc/fields.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggc {

namespace {

std::string label_key(const PBWMonomial& m) {
  std::string k;
  k.reserve(m.factors.size() * 2);
  for (const auto& f : m.factors) {
    k.push_back(static_cast<char>(f.gen));
    k.push_back(static_cast<char>(f.depth));
  }
  return k;
}

// Coefficient of the derivative field: (a t^{-s} l_0)_(m) = c(m, s) a t^m
// with c(m, s) = prod_{r=1}^{s-1} (-m - r) / (s-1)!.
Rat derivative_coeff(int m, int s) {
  Rat num(1);
  for (int r = 1; r < s; ++r) num *= Rat(-m - r) / Rat(r);
  return num;
}

}  // namespace

PointConfig PointConfig::from_inverse_coords(std::vector<Rat> w) {
  if (w.empty())
    throw std::invalid_argument("at least one point is required");
  if (w.front() != 0)
    throw std::invalid_argument(
        "the first point must be infinity (inverse coordinate 0)");
  return PointConfig{std::move(w)};
}

bool PointConfig::pairwise_distinct() const {
  for (std::size_t i = 0; i < winv.size(); ++i)
    for (std::size_t j = i + 1; j < winv.size(); ++j)
      if (winv[i] == winv[j]) return false;
  return true;
}

bool PointConfig::all_infinite() const {
  return std::all_of(winv.begin(), winv.end(),
                     [](const Rat& w) { return w == 0; });
}

int AlphaPoly::min_support() const {
  for (int p = 0; p <= N; ++p)
    if (coeffs[p] != 0) return p;
  return N;
}

AlphaPoly alpha_coeffs(const PointConfig& pc, int s) {
  if (s < 1) throw std::invalid_argument("alpha_coeffs requires s >= 1");
  Poly1 prod = Poly1::constant(Rat(1));
  for (int j = 1; j < pc.n(); ++j) {
    Poly1 lin({-pc.winv[j], Rat(1)});
    for (int t = 0; t < s; ++t) prod = prod * lin;
  }
  AlphaPoly a;
  a.s = s;
  a.N = (pc.n() - 1) * s;
  a.coeffs.resize(a.N + 1, Rat(0));
  for (int p = 0; p <= a.N; ++p) a.coeffs[p] = prod.coeff(p);
  return a;
}

FieldEngine::FieldEngine(const TruncatedModule& mod) : mod_(mod) {}

FieldEngine::FieldEngine(const TruncatedModule& mod,
                         const TruncatedModule& labels_from, int s_max)
    : mod_(mod), s_max_(s_max) {
  if (&labels_from.algebra() != &mod.algebra() &&
      labels_from.algebra().dim() != mod.algebra().dim())
    throw std::invalid_argument("label module over a different algebra");
  for (int i = 0; i < labels_from.dim(); ++i) {
    const auto& mono = labels_from.monomial_of(i);
    int w = mono.degree();
    if (w >= 1 && w <= s_max) labels_.push_back({mono});
  }
  std::sort(labels_.begin(), labels_.end(),
            [](const FieldLabel& a, const FieldLabel& b) {
              if (a.weight() != b.weight()) return a.weight() < b.weight();
              return label_key(a.mono) < label_key(b.mono);
            });
  labels_.erase(std::unique(labels_.begin(), labels_.end(),
                            [](const FieldLabel& a, const FieldLabel& b) {
                              return a.mono == b.mono;
                            }),
                labels_.end());
}

int FieldEngine::label_id(const PBWMonomial& label) const {
  auto key = label_key(label);
  auto it = label_ids_.find(key);
  if (it != label_ids_.end()) return it->second;
  int id = static_cast<int>(label_monos_.size());
  label_ids_.emplace(std::move(key), id);
  label_monos_.push_back(label);
  return id;
}

FieldEngine::ApplyResult FieldEngine::apply_field(const PBWMonomial& label,
                                                  int m, int idx) const {
  const int D = mod_.cutoff();
  const int d = mod_.degree_of(idx);
  // A_(m) is homogeneous of degree -m.
  if (d - m < 0) return {};
  if (d - m > D) return {SparseVec(), false};

  if (label.factors.empty()) {
    // Y(|0>, z) = Id
    ApplyResult r;
    if (m == 0) r.vec = SparseVec::unit(idx);
    return r;
  }
  if (label.factors.size() == 1) {
    const auto& f = label.factors.front();
    Rat c = derivative_coeff(m, f.depth);
    if (c == 0) return {};
    auto r = mod_.apply_gen(f.gen, m, idx);
    r.vec *= c;
    return r;
  }

  const int lid = label_id(label);
  std::uint64_t key = (static_cast<std::uint64_t>(lid) << 44) |
                      (static_cast<std::uint64_t>(m + 4096) << 30) |
                      static_cast<std::uint64_t>(idx);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const PBWFactor f0 = label.factors.front();
  const int s1 = f0.depth;
  PBWMonomial rest{std::vector<PBWFactor>(label.factors.begin() + 1,
                                          label.factors.end())};

  ApplyResult res;
  // :A1(z) Y(rest,z): coefficient extraction, split at m1 <= -s1.
  // Creation side: A1_(m1) applied after rest_(m - m1).
  for (int m1 = -s1; m1 >= m - d; --m1) {
    Rat c = derivative_coeff(m1, s1);
    if (c == 0) continue;
    auto inner = apply_field(rest, m - m1, idx);
    res.clean = res.clean && inner.clean;
    if (inner.vec.empty()) continue;
    auto outer = mod_.apply_gen_vec(f0.gen, m1, inner.vec);
    res.clean = res.clean && outer.clean;
    res.vec.axpy(c, outer.vec);
  }
  // Annihilation side: A1_(m1) applied first.
  for (int m1 = -s1 + 1; m1 <= d; ++m1) {
    Rat c = derivative_coeff(m1, s1);
    if (c == 0) continue;
    auto first = mod_.apply_gen(f0.gen, m1, idx);
    res.clean = res.clean && first.clean;
    if (first.vec.empty()) continue;
    auto outer = apply_field_vec(rest, m - m1, first.vec);
    res.clean = res.clean && outer.clean;
    res.vec.axpy(c, outer.vec);
  }
  auto [it, inserted] = memo_.emplace(key, std::move(res));
  return it->second;
}

FieldEngine::ApplyResult FieldEngine::apply_field_vec(const PBWMonomial& label,
                                                      int m,
                                                      const SparseVec& v) const {
  ApplyResult out;
  for (const auto& [idx, c] : v.terms()) {
    auto r = apply_field(label, m, idx);
    out.clean = out.clean && r.clean;
    out.vec.axpy(c, r.vec);
  }
  return out;
}

OperatorMatrix FieldEngine::field_coefficient(const PBWMonomial& label,
                                              int m) const {
  OperatorMatrix op;
  op.dim = mod_.dim();
  op.degree_shift = -m;
  op.cols.resize(op.dim);
  for (int i = 0; i < op.dim; ++i) {
    auto r = apply_field(label, m, i);
    op.truncated = op.truncated || !r.clean;
    op.cols[i] = std::move(r.vec);
  }
  return op;
}

FieldEngine::ApplyResult FieldEngine::apply_gg(const PBWMonomial& label, int M,
                                               const AlphaPoly& alpha,
                                               int idx) const {
  if (M <= 0) throw std::invalid_argument("Y_u^{(M)} requires M > 0");
  if (alpha.s != label.degree())
    throw std::invalid_argument("alpha expansion does not match |A|");
  ApplyResult out;
  for (int p = 0; p <= alpha.N; ++p) {
    if (alpha.coeffs[p] == 0) continue;
    auto r = apply_field(label, -M - p, idx);
    out.clean = out.clean && r.clean;
    out.vec.axpy(alpha.coeffs[p], r.vec);
  }
  return out;
}

OperatorMatrix FieldEngine::gg_generator(const PBWMonomial& label, int M,
                                         const PointConfig& pc) const {
  auto alpha = alpha_coeffs(pc, label.degree());
  OperatorMatrix op;
  op.dim = mod_.dim();
  // components shift degree by M + p over the alpha support
  op.degree_shift = M + alpha.min_support();
  op.cols.resize(op.dim);
  for (int i = 0; i < op.dim; ++i) {
    auto r = apply_gg(label, M, alpha, i);
    op.truncated = op.truncated || !r.clean;
    op.cols[i] = std::move(r.vec);
  }
  return op;
}

Poly2 phi_decompose_lhs(const PointConfig& pc, int s) {
  auto alpha = alpha_coeffs(pc, s + 1);
  Poly2 lhs;
  for (int l = 0; l <= alpha.N - 1; ++l)
    for (int i = 1; i <= alpha.N - l; ++i)
      lhs.add_term(i, l, alpha.coeffs[i + l]);
  return lhs;
}

PhiDecomposition phi_decompose(const PointConfig& pc, int s) {
  if (s < 1) throw std::invalid_argument("phi_decompose requires s >= 1");
  const int n = pc.n();

  // F_{s+1}(v) = prod_{j=2}^n (v - w_j)^{s+1}; peel one linear factor per
  // point, collecting the emitted y-terms.
  std::vector<Rat> pts(pc.winv.begin() + 1, pc.winv.end());
  Poly1 g = Poly1::constant(Rat(1));
  for (const auto& w : pts) {
    Poly1 lin({-w, Rat(1)});
    for (int t = 0; t <= s; ++t) g = g * lin;
  }
  Poly1 ys = Poly1::constant(Rat(1));  // prod (y - w_j)^s
  for (const auto& w : pts) {
    Poly1 lin({-w, Rat(1)});
    for (int t = 0; t < s; ++t) ys = ys * lin;
  }

  Poly2 q = Poly2::zero();
  Poly1 xpref = Poly1::constant(Rat(1));
  for (int j = n - 1; j >= 1; --j) {
    Poly1 lin({-pc.winv[j], Rat(1)});
    g = g.divide_exact(lin);
    // emitted term: xpref(x) * y * g(y), divisible by prod (y - w_j)^s
    Poly1 reduced = (Poly1::monomial(1) * g).divide_exact(ys);
    q = q + Poly2::in_x(xpref) * Poly2::in_y(reduced);
    xpref = xpref * lin;
  }

  // Subtract the added i = 0 column, F_{s+1}(y) = prod (y-w_j)^{s+1}:
  // F_{s+1}(y) / prod (y-w_j)^s = prod (y - w_j).
  Poly1 extra = Poly1::constant(Rat(1));
  for (const auto& w : pts) extra = extra * Poly1({-w, Rat(1)});
  q = q - Poly2::in_y(extra);

  PhiDecomposition d;
  d.p = phi_map(g);  // g is now prod (v - w_j)^s
  d.q = q;
  return d;
}

bool phi_decomposition_valid(const PointConfig& pc, int s,
                             const PhiDecomposition& d) {
  std::vector<Rat> pts(pc.winv.begin() + 1, pc.winv.end());
  Poly1 xprod = Poly1::from_roots(pts);
  Poly1 yprod = Poly1::constant(Rat(1));
  for (const auto& w : pts) {
    Poly1 lin({-w, Rat(1)});
    for (int t = 0; t < s; ++t) yprod = yprod * lin;
  }
  Poly2 rhs = Poly2::in_x(xprod) * d.p + Poly2::in_y(yprod) * d.q;
  return rhs == phi_decompose_lhs(pc, s);
}

}  // namespace ggc
