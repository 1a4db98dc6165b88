#include "ggc/coinv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace ggc {

DegreeSpan::DegreeSpan(const TruncatedModule& mod)
    : mod_(&mod), span_(mod.dim()) {
  const int n = mod.dim();
  perm_.resize(n);
  inv_.resize(n);
  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return mod.degree_of(a) > mod.degree_of(b);
  });
  for (int pos = 0; pos < n; ++pos) {
    inv_[pos] = order[pos];
    perm_[order[pos]] = pos;
  }
}

SparseVec DegreeSpan::permute(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) out.set(perm_[i], c);
  return out;
}

SparseVec DegreeSpan::unpermute(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) out.set(inv_[i], c);
  return out;
}

bool DegreeSpan::insert(const SparseVec& v) { return span_.insert(permute(v)); }

bool DegreeSpan::contains(const SparseVec& v) const {
  return span_.contains(permute(v));
}

SparseVec DegreeSpan::residual(const SparseVec& v) const {
  return unpermute(span_.reduce(permute(v)));
}

int DegreeSpan::rank_upto(int d) const {
  int c = 0;
  for (auto p : span_.pivot_cols())
    if (mod_->degree_of(inv_[p]) <= d) ++c;
  return c;
}

std::vector<int> DegreeSpan::quotient_basis(int d) const {
  std::vector<char> is_pivot(mod_->dim(), 0);
  for (auto p : span_.pivot_cols()) is_pivot[inv_[p]] = 1;
  std::vector<int> out;
  for (int i = 0; i < mod_->dim(); ++i)
    if (!is_pivot[i] && mod_->degree_of(i) <= d) out.push_back(i);
  return out;
}

std::string GenRecord::describe(const LieAlgebra& lie) const {
  std::string s;
  if (from_ou) {
    s = "Y^(" + std::to_string(M) + ")(" + monomial_to_string(label, lie) +
        ") v[" + std::to_string(source) + "]";
  } else {
    s = lie.name(x_gen) + " (x) pi(t^-1) t^-" + std::to_string(r) + " v[" +
        std::to_string(source) + "]";
  }
  s += ", top degree " + std::to_string(top_degree);
  return s;
}

GeneratorFamily oc_generators(const TruncatedModule& m, const PointConfig& pc,
                              int d_cap, int r_max) {
  const int n = pc.n();
  const int D = m.cutoff();
  if (d_cap > D) throw std::invalid_argument("d_cap exceeds the truncation");
  if (r_max < 0) r_max = d_cap - n;

  // pi(T) = prod_{j=1}^n (T - w_j); w_1 = 0 makes the constant term vanish.
  Poly1 pi = Poly1::from_roots(pc.winv);

  GeneratorFamily fam{DegreeSpan(m), {}, {}};
  const auto& lie = m.algebra();
  for (int r = 0; r + n <= d_cap; ++r) {
    if (r > r_max) break;
    for (int x = 0; x < lie.dim(); ++x) {
      for (int v = 0; v < m.dim(); ++v) {
        int dv = m.degree_of(v);
        if (dv + n + r > d_cap) continue;
        SparseVec acc;
        bool clean = true;
        for (int i = 1; i <= n; ++i) {
          const Rat& c = pi.coeff(i);
          if (c == 0) continue;
          auto res = m.apply_gen(x, -(i + r), v);
          clean = clean && res.clean;
          acc.axpy(c, res.vec);
        }
        if (!clean)
          throw std::logic_error("O^c generator unexpectedly truncated");
        GenRecord rec;
        rec.from_ou = false;
        rec.x_gen = x;
        rec.r = r;
        rec.source = v;
        rec.top_degree = dv + n + r;
        fam.gens.push_back(std::move(rec));
        fam.vecs.push_back(std::move(acc));
      }
    }
  }
  // saturate the span cheaply: insert by ascending top degree
  std::vector<std::size_t> order(fam.gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fam.gens[a].top_degree < fam.gens[b].top_degree;
  });
  for (auto i : order)
    if (!fam.vecs[i].empty()) fam.span.insert(fam.vecs[i]);
  return fam;
}

GeneratorFamily ou_generators(const TruncatedModule& m, const FieldEngine& eng,
                              const PointConfig& pc, int s_max, int M_max,
                              int d_cap) {
  const int D = m.cutoff();
  if (d_cap > D) throw std::invalid_argument("d_cap exceeds the truncation");

  GeneratorFamily fam{DegreeSpan(m), {}, {}};
  if (M_max <= 0) return fam;

  std::map<int, AlphaPoly> alphas;
  for (const auto& label : eng.labels()) {
    int s = label.weight();
    if (s > s_max) continue;
    auto ait = alphas.find(s);
    if (ait == alphas.end()) ait = alphas.emplace(s, alpha_coeffs(pc, s)).first;
    const AlphaPoly& alpha = ait->second;
    for (int M = 1; M <= M_max; ++M) {
      for (int v = 0; v < m.dim(); ++v) {
        int dv = m.degree_of(v);
        if (dv + M + alpha.N > d_cap) continue;
        auto res = eng.apply_gg(label.mono, M, alpha, v);
        if (!res.clean) continue;  // conservatively drop clipped products
        GenRecord rec;
        rec.from_ou = true;
        rec.label = label.mono;
        rec.M = M;
        rec.source = v;
        rec.top_degree = dv + M + alpha.N;
        fam.gens.push_back(std::move(rec));
        fam.vecs.push_back(std::move(res.vec));
      }
    }
  }
  std::vector<std::size_t> order(fam.gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fam.gens[a].top_degree < fam.gens[b].top_degree;
  });
  for (auto i : order)
    if (!fam.vecs[i].empty()) fam.span.insert(fam.vecs[i]);
  return fam;
}

VerifyContext VerifyContext::create(const std::string& algebra, int k,
                                    const DominantWeight& lambda, int D,
                                    int s_cap) {
  VerifyContext ctx;
  auto rs = std::make_shared<const RootSystemData>(RootSystemData::make(algebra));
  if (!rs->in_level_alcove(lambda.coords, k) || !rs->is_dominant(lambda.coords))
    throw std::invalid_argument("weight outside P_+^k: " +
                                weight_to_string(lambda.coords));
  ctx.lie = std::make_shared<const LieAlgebra>(rs);
  ctx.module = shapovalov_radical(build_parabolic_verma(ctx.lie, lambda, k, D));
  DominantWeight vac{WeightCoords(rs->rank(), 0)};
  ctx.vacuum =
      shapovalov_radical(build_parabolic_verma(ctx.lie, vac, k, s_cap));
  ctx.engine = std::make_unique<FieldEngine>(ctx.module, ctx.vacuum, s_cap);
  ctx.fusion = std::make_unique<FusionTable>(rs, k);
  return ctx;
}

bool CoinvariantReport::pass() const {
  if (!oc_in_ou.pass || !ou_in_oc.pass) return false;
  if (!stabilized) return false;
  if (dims_gate && !dims_match) return false;
  if (has_multiplicities && multiplicity_total != stabilized_dim) return false;
  return true;
}

CoinvariantReport verify_theorem(const VerifyContext& ctx,
                                 const PointConfig& pc,
                                 const VerifyOptions& opt) {
  const auto& mod = ctx.module;
  const int D = mod.cutoff();
  const int n = pc.n();

  CoinvariantReport rep;
  rep.algebra = mod.root_system().label();
  rep.level = mod.level();
  rep.weight = mod.highest_weight().coords;
  for (const auto& w : pc.winv) rep.points.push_back(rat_to_string(w));
  rep.cutoff = D;
  rep.s_max = opt.s_max >= 0 ? opt.s_max
                             : std::min(D - n, ctx.engine->label_weight_cap());
  rep.m_max = opt.M_max >= 0 ? opt.M_max : D;
  rep.r_max = opt.r_max >= 0 ? opt.r_max : D - n;
  if (rep.s_max < 1 || D < n + rep.s_max)
    throw std::invalid_argument("truncation too small: need D >= n + s_max");

  auto oc = oc_generators(mod, pc, D, rep.r_max);
  auto ou = ou_generators(mod, *ctx.engine, pc, rep.s_max, rep.m_max, D);

  for (std::size_t i = 0; i < oc.gens.size(); ++i) {
    if (oc.vecs[i].empty()) continue;
    if (!ou.span.contains(oc.vecs[i])) {
      rep.oc_in_ou.pass = false;
      rep.oc_in_ou.witness = oc.gens[i].describe(mod.algebra());
      break;
    }
  }
  for (std::size_t i = 0; i < ou.gens.size(); ++i) {
    if (ou.vecs[i].empty()) continue;
    if (!oc.span.contains(ou.vecs[i])) {
      rep.ou_in_oc.pass = false;
      rep.ou_in_oc.witness = ou.gens[i].describe(mod.algebra());
      break;
    }
  }

  auto dims = mod.graded_dims();
  long long cum = 0;
  rep.q_series.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    cum += dims[d];
    rep.q_series[d] = cum - oc.span.rank_upto(d);
  }
  int d0 = D;
  while (d0 > 0 && rep.q_series[d0 - 1] == rep.q_series[D]) --d0;
  rep.plateau_start = d0;
  rep.stabilized = (D - d0 + 1) >= 2;
  if (rep.stabilized) rep.stabilized_dim = rep.q_series[D];

  rep.predicted_dim =
      ctx.fusion->gg_dimension(mod.highest_weight(), n);
  rep.dims_gate = pc.pairwise_distinct() || mod.root_system().label() == "A1";
  rep.dims_match = rep.stabilized && rep.stabilized_dim == rep.predicted_dim;

  if (opt.decompose && pc.pairwise_distinct() && rep.stabilized &&
      rep.plateau_start + n - 1 <= D) {
    auto table = decompose_gn(mod, pc, oc.span, rep.plateau_start);
    rep.has_multiplicities = true;
    rep.multiplicity_total = 0;
    for (const auto& [mus, mult] : table) {
      rep.multiplicities.push_back({mus, mult});
      long long dprod = mult;
      for (const auto& w : mus)
        dprod *= mod.root_system().weyl_dim(DominantWeight{w});
      rep.multiplicity_total += dprod;
    }
  }
  return rep;
}

std::map<std::vector<WeightCoords>, long long> decompose_gn(
    const TruncatedModule& m, const PointConfig& pc, const DegreeSpan& oc_span,
    int d_star) {
  if (!pc.pairwise_distinct())
    throw std::invalid_argument(
        "decompose_gn needs pairwise distinct points: the evaluation "
        "isomorphism g (x) C[t^-1]/pi -> g^n degenerates at coincidences");
  const int n = pc.n();
  const auto& rs = m.root_system();
  const auto& lie = m.algebra();
  const int l = rs.rank();

  auto quot = oc_span.quotient_basis(d_star);
  {
    auto all = oc_span.quotient_basis(m.cutoff());
    if (all != quot)
      throw std::logic_error(
          "quotient not stabilized: representatives above the plateau");
  }
  const int q = static_cast<int>(quot.size());
  std::vector<int> qpos(m.dim(), -1);
  for (int i = 0; i < q; ++i) qpos[quot[i]] = i;

  // Interpolation polynomials delta_j(T), deg < n, delta_j(w_i) = delta_ij.
  std::vector<Poly1> delta;
  for (int j = 0; j < n; ++j) {
    Poly1 p = Poly1::constant(Rat(1));
    Rat denom(1);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      p = p * Poly1({-pc.winv[i], Rat(1)});
      denom *= pc.winv[j] - pc.winv[i];
    }
    p = p * Poly1::constant(Rat(1) / denom);
    delta.push_back(p);
  }

  // action of x through copy j on the quotient basis
  auto action = [&](int x, int j) {
    std::vector<SparseVec> cols(q);
    for (int c = 0; c < q; ++c) {
      SparseVec img;
      for (int r = 0; r < n; ++r) {
        const Rat& co = delta[j].coeff(r);
        if (co == 0) continue;
        auto res = m.apply_gen(x, -r, quot[c]);
        if (!res.clean)
          throw std::logic_error("quotient action crossed the truncation");
        img.axpy(co, res.vec);
      }
      SparseVec red = oc_span.residual(img);
      SparseVec col;
      for (const auto& [idx, v] : red.terms()) {
        if (qpos[idx] < 0)
          throw std::logic_error("residual outside the quotient basis");
        col.set(qpos[idx], v);
      }
      cols[c] = std::move(col);
    }
    return cols;
  };

  std::vector<std::vector<SparseVec>> h_act(n * l), e_act(n * l);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < l; ++i) {
      h_act[j * l + i] = action(lie.h_index(i), j);
      e_act[j * l + i] = action(lie.e_simple(i), j);
    }

  auto basis = rs.dominant_weights_at_level(m.level());
  std::map<std::vector<WeightCoords>, long long> table;
  std::vector<int> tuple(n, 0);
  long long total = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      // multiplicity = dim of the joint highest-weight space
      const int rows_per = q;
      SpanBasis cols(static_cast<int>(2 * n * l) * rows_per);
      int rank = 0;
      for (int c = 0; c < q; ++c) {
        SparseVec stacked;
        int blockoff = 0;
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < l; ++i) {
            const auto& hc = h_act[j * l + i][c];
            int eig = basis[tuple[j]].coords[i];
            for (const auto& [r, v] : hc.terms())
              stacked.set(blockoff + r, v);
            if (eig)
              stacked.set(blockoff + c,
                          stacked.coeff(blockoff + c) - Rat(eig));
            blockoff += rows_per;
          }
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < l; ++i) {
            const auto& ec = e_act[j * l + i][c];
            for (const auto& [r, v] : ec.terms())
              stacked.set(blockoff + r, v);
            blockoff += rows_per;
          }
        if (cols.insert(stacked)) ++rank;
      }
      long long mult = q - rank;
      if (mult) {
        std::vector<WeightCoords> key;
        for (int j = 0; j < n; ++j) key.push_back(basis[tuple[j]].coords);
        table[key] = mult;
        long long dprod = mult;
        for (int j = 0; j < n; ++j)
          dprod *= rs.weyl_dim(basis[tuple[j]]);
        total += dprod;
      }
      return;
    }
    for (int t = 0; t < static_cast<int>(basis.size()); ++t) {
      tuple[pos] = t;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  if (total != q)
    throw std::logic_error(
        "g^n decomposition does not exhaust the quotient dimension");
  return table;
}

std::string CoinvariantReport::to_text() const {
  std::string s;
  s += "theorem verification: " + algebra + " level " + std::to_string(level) +
       " weight " + weight_to_string(weight) + "\n";
  s += "points (inverse coords): ";
  for (std::size_t i = 0; i < points.size(); ++i)
    s += (i ? "," : "") + points[i];
  s += "\ncutoff D=" + std::to_string(cutoff) +
       " s_max=" + std::to_string(s_max) + " M_max=" + std::to_string(m_max) +
       " r_max=" + std::to_string(r_max) + "\n";
  s += "q series:";
  for (auto v : q_series) s += " " + std::to_string(v);
  s += "\n";
  s += std::string("O^c in O_u: ") + (oc_in_ou.pass ? "pass" : "FAIL") +
       (oc_in_ou.pass ? "" : " at " + oc_in_ou.witness) + "\n";
  s += std::string("O_u in O^c: ") + (ou_in_oc.pass ? "pass" : "FAIL") +
       (ou_in_oc.pass ? "" : " at " + ou_in_oc.witness) + "\n";
  if (stabilized)
    s += "stabilized dimension " + std::to_string(stabilized_dim) +
         " (plateau from degree " + std::to_string(plateau_start) + ")\n";
  else
    s += "not stabilized within the truncation window\n";
  s += "predicted dimension " + std::to_string(predicted_dim) +
       (dims_gate ? (dims_match ? " (match)" : " (MISMATCH)")
                  : " (comparison not asserted at coincident points)") +
       "\n";
  if (has_multiplicities) {
    s += "g^n multiplicities:\n";
    for (const auto& [mus, mult] : multiplicities) {
      s += "  ";
      for (std::size_t j = 0; j < mus.size(); ++j)
        s += (j ? " (x) " : "") + weight_to_string(mus[j]);
      s += " : " + std::to_string(mult) + "\n";
    }
    s += "total " + std::to_string(multiplicity_total) + "\n";
  }
  s += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
  return s;
}

std::string CoinvariantReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["algebra"] = algebra;
  j["level"] = level;
  j["weight"] = weight;
  j["points_winv"] = points;
  j["cutoff"] = cutoff;
  j["s_max"] = s_max;
  j["m_max"] = m_max;
  j["r_max"] = r_max;
  j["q_series"] = q_series;
  j["stabilized"] = stabilized;
  if (stabilized) {
    j["plateau_start"] = plateau_start;
    j["stabilized_dim"] = stabilized_dim;
  }
  j["predicted_dim"] = predicted_dim;
  j["dims_gate"] = dims_gate;
  j["dims_match"] = dims_match;
  j["inclusion_oc_in_ou"] = {{"pass", oc_in_ou.pass},
                             {"witness", oc_in_ou.witness}};
  j["inclusion_ou_in_oc"] = {{"pass", ou_in_oc.pass},
                             {"witness", ou_in_oc.witness}};
  if (has_multiplicities) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [mus, mult] : multiplicities) {
      nlohmann::json e;
      e["weights"] = mus;
      e["mult"] = mult;
      t.push_back(e);
    }
    j["multiplicity_table"] = t;
    j["multiplicity_total"] = multiplicity_total;
  }
  j["pass"] = pass();
  return j.dump(2);
}

}  // namespace ggc
