#include "ggc/affmod.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace ggc {

std::string monomial_to_string(const PBWMonomial& m, const LieAlgebra& lie) {
  if (m.factors.empty()) return "1";
  std::string s;
  for (const auto& f : m.factors) {
    if (!s.empty()) s += " ";
    s += lie.name(f.gen) + "[-" + std::to_string(f.depth) + "]";
  }
  return s;
}

SparseVec OperatorMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) out.axpy(c, cols[i]);
  return out;
}

RationalMatrix OperatorMatrix::to_matrix() const {
  RationalMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (const auto& [r, c] : cols[j].terms()) m.set(r, j, c);
  return m;
}

namespace {

std::string mono_key(const PBWMonomial& m) {
  std::string k;
  k.reserve(m.factors.size() * 2);
  for (const auto& f : m.factors) {
    k.push_back(static_cast<char>(f.gen));
    k.push_back(static_cast<char>(f.depth));
  }
  return k;
}

std::uint64_t pack_key(int gen, int power, int idx) {
  return (static_cast<std::uint64_t>(gen) << 48) |
         (static_cast<std::uint64_t>(power + 2048) << 32) |
         static_cast<std::uint64_t>(idx);
}

}  // namespace

struct VermaCore {
  std::shared_ptr<const LieAlgebra> lie;
  DominantWeight lambda;
  int k = 0;
  int D = 0;
  FiniteModule fin;
  int fdim = 0;

  std::vector<PBWMonomial> monos;  // by (degree, enumeration order)
  std::unordered_map<std::string, int> mono_index;
  std::vector<int> degrees;             // per basis index
  std::vector<WeightCoords> weights;    // per basis index
  int dim = 0;

  mutable std::unordered_map<std::uint64_t, TruncatedModule::ApplyResult> memo;

  VermaCore(std::shared_ptr<const LieAlgebra> l, DominantWeight lam, int lev,
            int cutoff)
      : lie(std::move(l)), lambda(std::move(lam)), k(lev), D(cutoff),
        fin(lie, lambda) {}

  int basis_index(int mono_id, int fin_idx) const {
    return mono_id * fdim + fin_idx;
  }
  int mono_of(int idx) const { return idx / fdim; }
  int fin_of(int idx) const { return idx % fdim; }

  int lookup(const PBWMonomial& m) const {
    auto it = mono_index.find(mono_key(m));
    if (it == mono_index.end())
      throw std::logic_error("straightening produced an unknown monomial");
    return it->second;
  }

  const TruncatedModule::ApplyResult& apply(int gen, int power, int idx) const;
  TruncatedModule::ApplyResult apply_vec(int gen, int power,
                                         const SparseVec& v) const;
  TruncatedModule::ApplyResult apply_factor(PBWFactor f,
                                            const SparseVec& v) const;
  Rat pairing(int i, int j) const;
};

const TruncatedModule::ApplyResult& VermaCore::apply(int gen, int power,
                                                     int idx) const {
  if (gen < 0 || gen >= lie->dim())
    throw std::invalid_argument("unknown generator index");
  auto key = pack_key(gen, power, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  TruncatedModule::ApplyResult res;
  const PBWMonomial& mono = monos[mono_of(idx)];
  const int fin_idx = fin_of(idx);

  if (mono.factors.empty()) {
    if (power > 0) {
      // g (x) tC[t] annihilates V_lambda
    } else if (power == 0) {
      for (const auto& [t, c] : fin.act(gen, fin_idx).terms())
        res.vec.set(basis_index(0, t), c);
    } else {
      int depth = -power;
      if (depth > D) {
        res.clean = false;
      } else {
        PBWMonomial m2{{PBWFactor{static_cast<std::int16_t>(gen),
                                  static_cast<std::int16_t>(depth)}}};
        res.vec = SparseVec::unit(basis_index(lookup(m2), fin_idx));
      }
    }
  } else {
    const PBWFactor f0 = mono.factors.front();
    PBWMonomial rest{std::vector<PBWFactor>(mono.factors.begin() + 1,
                                            mono.factors.end())};
    const int rest_idx = basis_index(lookup(rest), fin_idx);
    const PBWFactor cand{static_cast<std::int16_t>(gen),
                         static_cast<std::int16_t>(-power)};
    if (power < 0 && factor_le(cand, f0)) {
      if (mono.degree() - power > D) {
        res.clean = false;
      } else {
        PBWMonomial m2;
        m2.factors.reserve(mono.factors.size() + 1);
        m2.factors.push_back(cand);
        m2.factors.insert(m2.factors.end(), mono.factors.begin(),
                          mono.factors.end());
        res.vec = SparseVec::unit(basis_index(lookup(m2), fin_idx));
      }
    } else {
      // x t^m (y t^{-j}) = (y t^{-j}) x t^m + [x,y] t^{m-j} + m d (x,y) K
      const auto& r1 = apply(gen, power, rest_idx);
      bool clean = r1.clean;
      auto pushed = apply_factor(f0, r1.vec);
      clean = clean && pushed.clean;
      res.vec = std::move(pushed.vec);
      const SparseVec& br = lie->bracket(gen, f0.gen);
      for (const auto& [g2, c] : br.terms()) {
        const auto& r2 = apply(g2, power - f0.depth, rest_idx);
        res.vec.axpy(c, r2.vec);
        clean = clean && r2.clean;
      }
      if (power == f0.depth) {
        Rat central = Rat(power) * lie->form(gen, f0.gen) * Rat(k);
        if (central != 0) res.vec.axpy(central, SparseVec::unit(rest_idx));
      }
      res.clean = clean;
    }
  }
  auto [it, inserted] = memo.emplace(key, std::move(res));
  return it->second;
}

TruncatedModule::ApplyResult VermaCore::apply_factor(PBWFactor f,
                                                     const SparseVec& v) const {
  TruncatedModule::ApplyResult out;
  for (const auto& [idx, c] : v.terms()) {
    const PBWMonomial& mono = monos[mono_of(idx)];
    if (mono.factors.empty() || factor_le(f, mono.factors.front())) {
      if (mono.degree() + f.depth > D) {
        out.clean = false;
      } else {
        PBWMonomial m2;
        m2.factors.reserve(mono.factors.size() + 1);
        m2.factors.push_back(f);
        m2.factors.insert(m2.factors.end(), mono.factors.begin(),
                          mono.factors.end());
        out.vec.axpy(c, SparseVec::unit(basis_index(lookup(m2), fin_of(idx))));
      }
    } else {
      const auto& r = apply(f.gen, -f.depth, idx);
      out.vec.axpy(c, r.vec);
      out.clean = out.clean && r.clean;
    }
  }
  return out;
}

TruncatedModule::ApplyResult VermaCore::apply_vec(int gen, int power,
                                                  const SparseVec& v) const {
  TruncatedModule::ApplyResult out;
  for (const auto& [idx, c] : v.terms()) {
    const auto& r = apply(gen, power, idx);
    out.vec.axpy(c, r.vec);
    out.clean = out.clean && r.clean;
  }
  return out;
}

Rat VermaCore::pairing(int i, int j) const {
  if (degrees[i] != degrees[j] || weights[i] != weights[j]) return Rat(0);
  SparseVec cur = SparseVec::unit(i);
  for (const auto& f : monos[mono_of(j)].factors) {
    auto r = apply_vec(lie->omega(f.gen), f.depth, cur);
    cur = std::move(r.vec);
    if (cur.empty()) return Rat(0);
  }
  Rat s(0);
  const int fj = fin_of(j);
  for (const auto& [t, c] : cur.terms()) {
    if (t >= fdim)
      throw std::logic_error("pairing did not land in degree zero");
    s += c * fin.gram(t, fj);
  }
  return s;
}

// Quotient data of L = W / rad<.,.>, per (degree, weight) block.
struct QuotientData {
  struct Block {
    std::vector<int> members;            // Verma ids, ascending
    std::vector<int> reps;               // accepted Verma ids
    std::vector<std::vector<Rat>> rows;  // [rep][member position]
    DenseMatrix ginv;                    // inverse Gram of the reps
  };

  std::vector<Block> blocks;
  std::vector<int> block_of;      // Verma id -> block index
  std::vector<int> pos_in_block;  // Verma id -> position among members
  std::vector<int> rep_ids;       // L basis as Verma ids, ascending
  std::unordered_map<int, int> l_index;  // Verma id -> L index

  mutable std::unordered_map<std::uint64_t, TruncatedModule::ApplyResult> memo;

  SparseVec project(const SparseVec& verma_vec) const {
    // classes are separated per block by pairing against the representatives
    std::map<int, std::vector<Rat>> q;
    for (const auto& [idx, c] : verma_vec.terms()) {
      int b = block_of[idx];
      auto& acc = q[b];
      const auto& blk = blocks[b];
      if (blk.reps.empty()) continue;
      if (acc.empty()) acc.assign(blk.reps.size(), Rat(0));
      int pos = pos_in_block[idx];
      for (std::size_t r = 0; r < blk.reps.size(); ++r)
        acc[r] += c * blk.rows[r][pos];
    }
    SparseVec out;
    for (auto& [b, acc] : q) {
      if (acc.empty()) continue;
      const auto& blk = blocks[b];
      const int n = static_cast<int>(blk.reps.size());
      for (int r = 0; r < n; ++r) {
        Rat x(0);
        for (int s = 0; s < n; ++s) x += blk.ginv[r][s] * acc[s];
        if (x != 0) out.set(l_index.at(blk.reps[r]), x);
      }
    }
    return out;
  }
};

const LieAlgebra& TruncatedModule::algebra() const { return *core_->lie; }
std::shared_ptr<const LieAlgebra> TruncatedModule::algebra_ptr() const {
  return core_->lie;
}
const RootSystemData& TruncatedModule::root_system() const {
  return core_->lie->root_system();
}
const DominantWeight& TruncatedModule::highest_weight() const {
  return core_->lambda;
}
int TruncatedModule::level() const { return core_->k; }
int TruncatedModule::cutoff() const { return core_->D; }

int TruncatedModule::dim() const {
  return quot_ ? static_cast<int>(quot_->rep_ids.size()) : core_->dim;
}

int TruncatedModule::degree_of(int idx) const {
  return core_->degrees[quot_ ? quot_->rep_ids[idx] : idx];
}

const WeightCoords& TruncatedModule::weight_of(int idx) const {
  return core_->weights[quot_ ? quot_->rep_ids[idx] : idx];
}

const PBWMonomial& TruncatedModule::monomial_of(int idx) const {
  int v = quot_ ? quot_->rep_ids[idx] : idx;
  return core_->monos[core_->mono_of(v)];
}

int TruncatedModule::finite_part_of(int idx) const {
  int v = quot_ ? quot_->rep_ids[idx] : idx;
  return core_->fin_of(v);
}

std::vector<long long> TruncatedModule::graded_dims() const {
  std::vector<long long> out(core_->D + 1, 0);
  const int n = dim();
  for (int i = 0; i < n; ++i) ++out[degree_of(i)];
  return out;
}

TruncatedModule::ApplyResult TruncatedModule::apply_gen(int gen, int power,
                                                        int idx) const {
  if (!quot_) return core_->apply(gen, power, idx);
  auto key = pack_key(gen, power, idx);
  if (auto it = quot_->memo.find(key); it != quot_->memo.end())
    return it->second;
  const auto& r = core_->apply(gen, power, quot_->rep_ids[idx]);
  ApplyResult res{quot_->project(r.vec), r.clean};
  quot_->memo.emplace(key, res);
  return res;
}

TruncatedModule::ApplyResult TruncatedModule::apply_gen_vec(
    int gen, int power, const SparseVec& v) const {
  ApplyResult out;
  for (const auto& [idx, c] : v.terms()) {
    auto r = apply_gen(gen, power, idx);
    out.vec.axpy(c, r.vec);
    out.clean = out.clean && r.clean;
  }
  return out;
}

OperatorMatrix TruncatedModule::operator_matrix(int gen, int power) const {
  OperatorMatrix m;
  m.dim = dim();
  m.degree_shift = -power;
  m.cols.resize(m.dim);
  for (int i = 0; i < m.dim; ++i) {
    auto r = apply_gen(gen, power, i);
    m.truncated = m.truncated || !r.clean;
    m.cols[i] = std::move(r.vec);
  }
  return m;
}

Rat TruncatedModule::contravariant(int i, int j) const {
  int vi = quot_ ? quot_->rep_ids[i] : i;
  int vj = quot_ ? quot_->rep_ids[j] : j;
  return core_->pairing(vi, vj);
}

SparseVec TruncatedModule::project_from_verma(const SparseVec& v) const {
  if (!quot_)
    throw std::logic_error("project_from_verma requires the irreducible form");
  return quot_->project(v);
}

const TruncatedModule& TruncatedModule::verma() const {
  if (!verma_)
    throw std::logic_error("module is already a parabolic Verma truncation");
  return *verma_;
}

TruncatedModule build_parabolic_verma(std::shared_ptr<const LieAlgebra> lie,
                                      const DominantWeight& lambda, int k,
                                      int D) {
  const auto& rs = lie->root_system();
  if (!rs.is_dominant(lambda.coords))
    throw std::invalid_argument("highest weight must be dominant");
  if (k < 0) throw std::invalid_argument("negative level");
  if (D < 0) throw std::invalid_argument("negative truncation degree");

  auto core = std::make_shared<VermaCore>(std::move(lie), lambda, k, D);
  core->fdim = core->fin.dim();

  // Creation letters in canonical order (deeper modes first).
  std::vector<PBWFactor> letters;
  for (int depth = D; depth >= 1; --depth)
    for (int g = 0; g < core->lie->dim(); ++g)
      letters.push_back({static_cast<std::int16_t>(g),
                         static_cast<std::int16_t>(depth)});

  std::vector<PBWFactor> current;
  auto emit = [&]() {
    PBWMonomial m{current};
    core->mono_index.emplace(mono_key(m), static_cast<int>(core->monos.size()));
    core->monos.push_back(std::move(m));
  };
  auto rec = [&](auto&& self, std::size_t min_letter, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = min_letter; i < letters.size(); ++i) {
      if (letters[i].depth > remaining) continue;
      current.push_back(letters[i]);
      self(self, i, remaining - letters[i].depth);
      current.pop_back();
    }
  };
  for (int d = 0; d <= D; ++d) rec(rec, 0, d);

  core->dim = static_cast<int>(core->monos.size()) * core->fdim;
  core->degrees.resize(core->dim);
  core->weights.resize(core->dim);
  for (int m = 0; m < static_cast<int>(core->monos.size()); ++m) {
    const auto& mono = core->monos[m];
    int deg = mono.degree();
    WeightCoords base(rs.rank(), 0);
    for (const auto& f : mono.factors) {
      const auto& w = core->lie->weight(f.gen);
      for (int i = 0; i < rs.rank(); ++i) base[i] += w[i];
    }
    for (int t = 0; t < core->fdim; ++t) {
      int idx = core->basis_index(m, t);
      core->degrees[idx] = deg;
      WeightCoords w = base;
      const auto& fw = core->fin.weight_of(t);
      for (int i = 0; i < rs.rank(); ++i) w[i] += fw[i];
      core->weights[idx] = std::move(w);
    }
  }

  TruncatedModule mod;
  mod.core_ = std::move(core);
  return mod;
}

TruncatedModule shapovalov_radical(const TruncatedModule& verma) {
  if (verma.irreducible())
    throw std::invalid_argument(
        "shapovalov_radical expects a parabolic Verma truncation");
  const auto core = verma.core_;
  auto quot = std::make_shared<QuotientData>();

  std::map<std::pair<int, WeightCoords>, std::vector<int>> block_map;
  for (int i = 0; i < core->dim; ++i)
    block_map[{core->degrees[i], core->weights[i]}].push_back(i);

  quot->block_of.assign(core->dim, -1);
  quot->pos_in_block.assign(core->dim, -1);

  for (const auto& [key, members] : block_map) {
    QuotientData::Block blk;
    blk.members = members;
    const int bidx = static_cast<int>(quot->blocks.size());
    for (std::size_t p = 0; p < members.size(); ++p) {
      quot->block_of[members[p]] = bidx;
      quot->pos_in_block[members[p]] = static_cast<int>(p);
    }

    GramFilter filter;
    std::vector<std::vector<char>> filled;
    for (int j : members) {
      std::vector<Rat> col(blk.reps.size());
      for (std::size_t r = 0; r < blk.reps.size(); ++r) {
        col[r] = core->pairing(j, blk.reps[r]);
        blk.rows[r][quot->pos_in_block[j]] = col[r];
        filled[r][quot->pos_in_block[j]] = 1;
      }
      Rat self = core->pairing(j, j);
      if (filter.try_add(col, self)) {
        blk.reps.push_back(j);
        blk.rows.emplace_back(members.size(), Rat(0));
        filled.emplace_back(members.size(), 0);
        blk.rows.back()[quot->pos_in_block[j]] = self;
        filled.back()[quot->pos_in_block[j]] = 1;
      }
    }
    // complete the pairing rows for members processed before acceptance
    for (std::size_t r = 0; r < blk.reps.size(); ++r)
      for (std::size_t p = 0; p < members.size(); ++p)
        if (!filled[r][p]) blk.rows[r][p] = core->pairing(members[p], blk.reps[r]);
    blk.ginv = filter.inverse();
    quot->blocks.push_back(std::move(blk));
  }

  for (const auto& blk : quot->blocks)
    quot->rep_ids.insert(quot->rep_ids.end(), blk.reps.begin(), blk.reps.end());
  std::sort(quot->rep_ids.begin(), quot->rep_ids.end());
  for (std::size_t i = 0; i < quot->rep_ids.size(); ++i)
    quot->l_index[quot->rep_ids[i]] = static_cast<int>(i);

  TruncatedModule mod;
  mod.core_ = core;
  mod.quot_ = std::move(quot);
  mod.verma_ = std::make_shared<const TruncatedModule>(verma);
  return mod;
}

std::string graded_dims_json(const TruncatedModule& m) {
  nlohmann::json j;
  j["algebra"] = m.root_system().label();
  j["level"] = m.level();
  j["weight"] = m.highest_weight().coords;
  j["cutoff"] = m.cutoff();
  j["irreducible"] = m.irreducible();
  j["dims"] = m.graded_dims();
  return j.dump();
}

bool graded_dims_match_json(const TruncatedModule& m, const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return false;
  return j == nlohmann::json::parse(graded_dims_json(m));
}

}  // namespace ggc
