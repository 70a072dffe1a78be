#pragma once

// Graded module presentations, free resolutions (Schreyer frames, then
// minimalization), Betti tables, and the invariants dim, depth, pd.

#include <algorithm>
#include <climits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scmkit/groebner.hpp"
#include "scmkit/linalg.hpp"

namespace scmkit {

/// Sentinels for the zero module: depth = +infinity, dim = -infinity.
inline constexpr int kInfinity = INT_MAX;
inline constexpr int kMinusInfinity = INT_MIN;

inline std::string format_extended(int v) {
  if (v == kInfinity) return "infinity";
  if (v == kMinusInfinity) return "-infinity";
  return std::to_string(v);
}

/// span(generators) / span(relations) inside a graded free module. The
/// relations need not lie inside the generator span; they are intersected
/// with it implicitly.
template <CoefficientField F>
class ModulePresentation {
 public:
  static ModulePresentation cokernel(const Matrix<F>& relations) {
    return ModulePresentation(Matrix<F>::identity(relations.ring(), relations.target()), relations, true);
  }
  static ModulePresentation subquotient(const Matrix<F>& generators, const Matrix<F>& relations) {
    require_same_ring(generators.ring(), relations.ring());
    if (!(generators.target() == relations.target()))
      throw std::invalid_argument("subquotient: generators and relations live in different free modules");
    return ModulePresentation(generators, relations, generators.is_identity());
  }
  static ModulePresentation free(const RingPtr<F>& ring, const FreeModule& m) {
    return cokernel(Matrix<F>(ring, m, {}));
  }
  /// S^1 / I
  static ModulePresentation quotient(const Ideal<F>& I) {
    std::vector<TermVec<F>> cols;
    for (const auto& g : I.gens()) cols.push_back(g.terms());
    return cokernel(Matrix<F>(I.ring(), FreeModule::free(1), std::move(cols)));
  }

  const RingPtr<F>& ring() const { return gens_.ring(); }
  const FreeModule& ambient() const { return gens_.target(); }
  const Matrix<F>& generators() const { return gens_; }
  const Matrix<F>& relations() const { return rels_; }
  bool is_cokernel() const { return is_cokernel_; }

  /// Zero iff every generator lies in the relation submodule.
  bool is_zero() const {
    if (gens_.cols() == 0) return true;
    auto gb = groebner(rels_);
    for (const auto& c : gens_.columns())
      if (!gb.contains(c)) return false;
    return true;
  }

  std::string to_string() const {
    if (ambient().rank() == 0) return "0";
    if (is_cokernel_) {
      if (rels_.is_zero()) return "free module of rank " + std::to_string(ambient().rank());
      return "cokernel " + indent(rels_.to_string(), 9);
    }
    std::string g = gens_.to_string(), r = rels_.to_string();
    if (ambient().rank() == 1) return "subquotient (" + strip(g) + ", " + strip(r) + ")";
    return "subquotient (\n" + g + ",\n" + r + ")";
  }

 private:
  ModulePresentation(Matrix<F> gens, Matrix<F> rels, bool is_cokernel)
      : gens_(std::move(gens)), rels_(std::move(rels)), is_cokernel_(is_cokernel) {}

  static std::string indent(const std::string& s, std::size_t k) {
    std::string out;
    for (char c : s) {
      out += c;
      if (c == '\n') out += std::string(k, ' ');
    }
    return out;
  }
  static std::string strip(const std::string& s) { return s; }

  Matrix<F> gens_;
  Matrix<F> rels_;
  bool is_cokernel_;
};

/// Matrix P with coker(P) isomorphic to M, written in M's generators.
/// With `strict`, relations that do not lie in the generator span are an
/// error instead of being intersected with it.
template <CoefficientField F>
Matrix<F> present_as_cokernel(const ModulePresentation<F>& M, bool strict = false) {
  if (M.is_cokernel()) return M.relations();
  const auto& K = M.generators();
  const auto& R = M.relations();
  if (strict) {
    auto gb = groebner(K);
    for (const auto& c : R.columns())
      if (!gb.contains(c)) throw std::invalid_argument("relation is not contained in the generator span");
  }
  Matrix<F> syz = syzygies_gb(K.concat(R));
  const auto m = static_cast<std::uint32_t>(K.cols());
  std::vector<TermVec<F>> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    TermVec<F> a;
    for (const auto& t : syz.column(j))
      if (t.comp < m) a.push_back(t);
    if (a.empty()) continue;
    cols.push_back(std::move(a));
    degs.push_back(syz.source().degrees[j]);
  }
  Matrix<F> P(M.ring(), K.source(), std::move(cols), std::move(degs));
  return minimal_generators(P);
}

/// Graded Betti numbers: (homological index, internal degree) -> count.
class BettiTable {
 public:
  void add(int i, int j, std::size_t count) {
    if (count) table_[{i, j}] += count;
  }
  std::size_t at(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? 0 : it->second;
  }
  std::size_t total(int i) const {
    std::size_t s = 0;
    for (const auto& [k, v] : table_)
      if (k.first == i) s += v;
    return s;
  }
  /// Largest i with a nonzero entry; -1 when empty.
  int length() const {
    int l = -1;
    for (const auto& [k, v] : table_) l = std::max(l, k.first);
    return l;
  }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return table_; }
  bool operator==(const BettiTable&) const = default;

  /// Rows indexed by j - i, as in the usual Betti diagram.
  std::string to_string() const {
    if (table_.empty()) return "0";
    int lo = INT_MAX, hi = INT_MIN, len = length();
    for (const auto& [k, v] : table_) {
      lo = std::min(lo, k.second - k.first);
      hi = std::max(hi, k.second - k.first);
    }
    std::string s = "total:";
    for (int i = 0; i <= len; ++i) s += " " + std::to_string(total(i));
    for (int r = lo; r <= hi; ++r) {
      s += "\n" + std::to_string(r) + ":";
      for (int i = 0; i <= len; ++i) {
        auto c = at(i, i + r);
        s += " " + (c ? std::to_string(c) : std::string("."));
      }
    }
    return s;
  }

 private:
  std::map<std::pair<int, int>, std::size_t> table_;
};

/// A graded free resolution F_0 <- F_1 <- ... ; maps[k] : F_{k+1} -> F_k.
template <CoefficientField F>
struct FreeResolution {
  RingPtr<F> ring;
  std::vector<FreeModule> modules;
  std::vector<Matrix<F>> maps;

  /// Index of the last nonzero free module (0 for the zero module).
  std::size_t length() const {
    std::size_t l = 0;
    for (std::size_t k = 0; k < modules.size(); ++k)
      if (modules[k].rank() != 0) l = k;
    return l;
  }

  /// Counts basis elements by degree; these are the graded Betti numbers
  /// when the resolution is minimal.
  BettiTable ranks() const {
    BettiTable b;
    for (std::size_t k = 0; k < modules.size(); ++k)
      for (int d : modules[k].degrees) b.add(static_cast<int>(k), d, 1);
    return b;
  }

  /// True when no map has a nonzero constant entry.
  bool is_minimal() const {
    for (const auto& m : maps)
      for (const auto& c : m.columns())
        for (const auto& t : c)
          if (t.mono.is_one()) return false;
    return true;
  }
};

namespace detail {

/// One level of a Schreyer frame: basis elements of F_k given by their
/// images in F_{k-1}.
template <CoefficientField F>
struct FrameLevel {
  std::vector<TermVec<F>> images;  // sorted under the order of F_{k-1}
  std::vector<int> degrees;
  std::shared_ptr<SchreyerData> data;  // induced order on F_k
};

}  // namespace detail

/// Schreyer's resolution of coker(presentation): a Groebner basis of the
/// relations, then iterated Schreyer syzygies. Not minimal in general.
template <CoefficientField F>
FreeResolution<F> schreyer_resolution(const Matrix<F>& presentation) {
  const auto& ring = presentation.ring();
  const F& field = ring->field();
  const MonomialOrder& mono = ring->order();
  const FreeModule& f0 = presentation.target();

  // Level 1: Groebner basis of the relations, grouped by lead component and,
  // inside a group, by decreasing lead monomial in lex.
  const ModuleOrder top = ModuleOrder::top(mono);
  auto gb = buchberger(field, top, presentation.columns(), f0.degrees, f0.rank() == 1);
  const MonomialOrder lex = MonomialOrder::lex();
  std::stable_sort(gb.begin(), gb.end(), [&](const TermVec<F>& a, const TermVec<F>& b) {
    if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
    return lex.compare(a.front().mono, b.front().mono) > 0;
  });

  std::vector<detail::FrameLevel<F>> levels;
  {
    detail::FrameLevel<F> l1;
    l1.data = std::make_shared<SchreyerData>();
    for (auto& g : gb) {
      l1.degrees.push_back(g.front().mono.degree() + f0.degrees[g.front().comp]);
      l1.data->totals.push_back(g.front().mono);
      l1.data->base.push_back(g.front().comp);
      l1.images.push_back(std::move(g));
    }
    levels.push_back(std::move(l1));
  }

  ModuleOrder below = top;  // order on F_{k-1}
  while (!levels.back().images.empty()) {
    const auto& cur = levels.back();
    const ModuleOrder here = ModuleOrder::schreyer(mono, cur.data);  // order on F_k
    const std::size_t m = cur.images.size();

    DivisorIndex index;
    std::vector<const TermVec<F>*> divisors;
    for (std::size_t l = 0; l < m; ++l) {
      index.add(cur.images[l].front().mono, cur.images[l].front().comp, l);
      divisors.push_back(&cur.images[l]);
    }

    detail::FrameLevel<F> next;
    next.data = std::make_shared<SchreyerData>();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& li = cur.images[i].front();
      // Quotients lcm(m_i, m_j) / m_i over later siblings, minimalized.
      std::vector<std::pair<Monomial, std::size_t>> cands;
      for (std::size_t j = i + 1; j < m && cur.images[j].front().comp == li.comp; ++j)
        cands.emplace_back(quotient(cur.images[j].front().mono, gcd(li.mono, cur.images[j].front().mono)), j);
      std::stable_sort(cands.begin(), cands.end(),
                       [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
      std::vector<std::pair<Monomial, std::size_t>> minimal;
      for (auto& c : cands) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const auto& k) { return divides(k.first, c.first); });
        if (!redundant) minimal.push_back(std::move(c));
      }
      std::sort(minimal.begin(), minimal.end(),
                [&](const auto& a, const auto& b) { return lex.compare(a.first, b.first) > 0; });

      for (auto& [q, j] : minimal) {
        const auto& lj = cur.images[j].front();
        Monomial uj = quotient(q * li.mono, lj.mono);
        std::vector<Summand<F>> s;
        s.push_back(Summand<F>{field.one(), q, &cur.images[i], 1});
        s.push_back(Summand<F>{field.neg(field.one()), uj, &cur.images[j], 1});
        std::vector<Quotient<F>> quots;
        auto rem = reduce(field, below, std::move(s), divisors, index, ReduceMode::Top, &quots);
        if (!rem.empty()) throw std::logic_error("Schreyer frame: S-pair did not reduce to zero");

        TermVec<F> syz;
        syz.push_back(Term<F>{field.one(), q, static_cast<std::uint32_t>(i)});
        syz.push_back(Term<F>{field.neg(field.one()), uj, static_cast<std::uint32_t>(j)});
        for (auto& qt : quots)
          syz.push_back(Term<F>{field.neg(qt.coef), std::move(qt.mono), static_cast<std::uint32_t>(qt.index)});
        terms::normalize(field, here, syz);

        next.degrees.push_back(q.degree() + cur.degrees[i]);
        next.data->totals.push_back(q * cur.data->totals[i]);
        next.data->base.push_back(cur.data->base[i]);
        next.images.push_back(std::move(syz));
      }
    }
    below = here;
    levels.push_back(std::move(next));
  }

  FreeResolution<F> res;
  res.ring = ring;
  res.modules.push_back(f0);
  FreeModule prev = f0;
  for (auto& l : levels) {
    if (l.images.empty()) break;
    FreeModule fk(l.degrees);
    res.maps.emplace_back(ring, prev, std::move(l.images), l.degrees);
    res.modules.push_back(fk);
    prev = std::move(fk);
  }
  return res;
}

/// Graded Betti numbers of the resolved module computed from any graded free
/// resolution: beta_{k,d} = f_{k,d} - rank(d_k)_d - rank(d_{k+1})_d, where
/// rank(.)_d is the rank of the constant part of a map in degree d.
template <CoefficientField F>
BettiTable betti_numbers(const FreeResolution<F>& res) {
  const F& field = res.ring->field();
  const std::size_t levels = res.modules.size();
  // constant_rank[k][d] for the map F_k -> F_{k-1}
  std::vector<std::map<int, std::size_t>> constant_rank(levels + 1);
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& map = res.maps[k - 1];
    std::map<int, std::vector<SparseVector<F>>> by_degree;
    for (std::size_t c = 0; c < map.cols(); ++c) {
      SparseVector<F> v;
      for (const auto& t : map.column(c))
        if (t.mono.is_one()) v.emplace_back(t.comp, t.coef);
      if (!v.empty()) by_degree[map.source().degrees[c]].push_back(std::move(v));
    }
    for (auto& [d, vs] : by_degree) constant_rank[k][d] = rank(field, std::move(vs));
  }
  BettiTable b;
  for (std::size_t k = 0; k < levels; ++k) {
    std::map<int, std::size_t> count;
    for (int d : res.modules[k].degrees) ++count[d];
    for (auto [d, f] : count) {
      std::size_t r = 0;
      if (auto it = constant_rank[k].find(d); it != constant_rank[k].end()) r += it->second;
      if (auto it = constant_rank[k + 1].find(d); it != constant_rank[k + 1].end()) r += it->second;
      b.add(static_cast<int>(k), d, f - r);
    }
  }
  return b;
}

/// Splits off trivial complexes 0 -> S(-d) -> S(-d) -> 0 until no map has a
/// unit entry.
template <CoefficientField F>
FreeResolution<F> minimize(const FreeResolution<F>& res) {
  const auto& ring = res.ring;
  const F& field = ring->field();
  const ModuleOrder top = ModuleOrder::top(ring->order());
  const std::size_t nmod = res.modules.size();

  std::vector<std::vector<bool>> alive(nmod);
  for (std::size_t k = 0; k < nmod; ++k) alive[k].assign(res.modules[k].rank(), true);
  // cols[k] = columns of d_{k+1}
  std::vector<std::vector<TermVec<F>>> cols(res.maps.size());
  for (std::size_t k = 0; k < res.maps.size(); ++k) cols[k] = res.maps[k].columns();

  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto& cs = cols[k];
    auto& rows_alive = alive[k];
    auto& cols_alive = alive[k + 1];
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;  // (row, col)
      for (std::size_t c = 0; c < cs.size() && !pivot; ++c) {
        if (!cols_alive[c]) continue;
        for (const auto& t : cs[c])
          if (t.mono.is_one() && rows_alive[t.comp]) {
            pivot = {t.comp, c};
            break;
          }
      }
      if (!pivot) break;
      auto [r, c] = *pivot;
      typename F::Element u = field.zero();
      for (const auto& t : cs[c])
        if (t.comp == r) u = t.coef;
      for (std::size_t c2 = 0; c2 < cs.size(); ++c2) {
        if (c2 == c || !cols_alive[c2]) continue;
        TermVec<F> entry;
        for (const auto& t : cs[c2])
          if (t.comp == r) entry.push_back(Term<F>{field.neg(field.div(t.coef, u)), t.mono, 0});
        if (entry.empty()) continue;
        cs[c2] = terms::add(field, top, cs[c2], terms::mul_poly(field, top, entry, cs[c]));
      }
      rows_alive[r] = false;
      cols_alive[c] = false;
    }
  }

  FreeResolution<F> out;
  out.ring = ring;
  std::vector<std::vector<std::uint32_t>> renumber(nmod);
  for (std::size_t k = 0; k < nmod; ++k) {
    FreeModule m;
    renumber[k].assign(res.modules[k].rank(), UINT32_MAX);
    for (std::size_t i = 0; i < alive[k].size(); ++i)
      if (alive[k][i]) {
        renumber[k][i] = static_cast<std::uint32_t>(m.rank());
        m.degrees.push_back(res.modules[k].degrees[i]);
      }
    out.modules.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<TermVec<F>> mc;
    for (std::size_t c = 0; c < cols[k].size(); ++c) {
      if (!alive[k + 1][c]) continue;
      TermVec<F> v;
      for (auto& t : cols[k][c])
        if (alive[k][t.comp]) v.push_back(Term<F>{t.coef, t.mono, renumber[k][t.comp]});
      mc.push_back(std::move(v));
    }
    out.maps.emplace_back(ring, out.modules[k], std::move(mc), out.modules[k + 1].degrees);
  }
  while (!out.modules.empty() && out.modules.size() > 1 && out.modules.back().rank() == 0) {
    out.modules.pop_back();
    out.maps.pop_back();
  }
  return out;
}

template <CoefficientField F>
FreeResolution<F> minimal_free_resolution(const ModulePresentation<F>& M) {
  return minimize(schreyer_resolution(present_as_cokernel(M)));
}

/// dim S/(monomial ideal): n minus the least number of variables meeting
/// every generator's support. An empty list gives n; the monomial 1 gives
/// -infinity.
inline int monomial_quotient_dim(std::size_t nvars, const std::vector<Monomial>& gens) {
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& g : gens) {
    if (g.is_one()) return kMinusInfinity;
    sets.push_back(g.support());
  }
  // Drop supersets, then branch on the smallest uncovered set.
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<std::size_t>> minimal;
  for (auto& s : sets) {
    bool super = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!super) minimal.push_back(std::move(s));
  }
  std::size_t best = nvars;
  std::vector<bool> chosen(nvars, false);
  auto covered = [&](const std::vector<std::size_t>& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; });
  };
  auto search = [&](auto&& self, std::size_t used) -> void {
    if (used >= best) return;
    const std::vector<std::size_t>* pick = nullptr;
    for (const auto& s : minimal)
      if (!covered(s) && (!pick || s.size() < pick->size())) pick = &s;
    if (!pick) {
      best = used;
      return;
    }
    if (used + 1 >= best) return;
    for (std::size_t v : *pick) {
      chosen[v] = true;
      self(self, used + 1);
      chosen[v] = false;
    }
  };
  search(search, 0);
  return static_cast<int>(nvars - best);
}

/// Krull dimension of coker(P), read off the initial module of im(P).
template <CoefficientField F>
int cokernel_dim(const Matrix<F>& P) {
  const std::size_t n = P.ring()->nvars();
  if (P.rows() == 0) return kMinusInfinity;
  auto gb = groebner(P);
  int d = kMinusInfinity;
  for (std::uint32_t c = 0; c < P.rows(); ++c) d = std::max(d, monomial_quotient_dim(n, gb.leads_in(c)));
  return d;
}

template <CoefficientField F>
int dim(const ModulePresentation<F>& M) {
  return cokernel_dim(present_as_cokernel(M));
}

template <CoefficientField F>
int dim(const Ideal<F>& I) {
  return dim(ModulePresentation<F>::quotient(I));
}

/// Projective dimension from the graded Betti numbers of the Schreyer
/// resolution; 0 for the zero module.
template <CoefficientField F>
int projective_dimension(const ModulePresentation<F>& M) {
  auto b = betti_numbers(schreyer_resolution(present_as_cokernel(M)));
  return std::max(0, b.length());
}

/// depth M = n - pd M (Auslander-Buchsbaum); +infinity for the zero module.
template <CoefficientField F>
int depth(const ModulePresentation<F>& M) {
  auto b = betti_numbers(schreyer_resolution(present_as_cokernel(M)));
  if (b.length() < 0) return kInfinity;
  return static_cast<int>(M.ring()->nvars()) - b.length();
}

template <CoefficientField F>
int depth(const Ideal<F>& I) {
  return depth(ModulePresentation<F>::quotient(I));
}

struct ModuleInvariants {
  int dim = kMinusInfinity;
  int depth = kInfinity;
  int pd = 0;
  bool is_zero() const { return dim == kMinusInfinity; }
  bool is_cohen_macaulay() const { return is_zero() || dim == depth; }
};

/// dim, depth and pd from one presentation and one resolution.
template <CoefficientField F>
ModuleInvariants invariants(const ModulePresentation<F>& M) {
  Matrix<F> P = present_as_cokernel(M);
  ModuleInvariants inv;
  inv.dim = cokernel_dim(P);
  if (inv.is_zero()) return inv;
  auto b = betti_numbers(schreyer_resolution(P));
  inv.pd = b.length();
  inv.depth = static_cast<int>(M.ring()->nvars()) - inv.pd;
  return inv;
}

/// The zero module counts as Cohen-Macaulay.
template <CoefficientField F>
bool is_cohen_macaulay(const ModulePresentation<F>& M) {
  return invariants(M).is_cohen_macaulay();
}

/// Minimal presentation of coker(P): unit entries are used to eliminate
/// generators, then the remaining relations are minimized.
template <CoefficientField F>
Matrix<F> prune(const Matrix<F>& P) {
  const auto& ring = P.ring();
  const F& field = ring->field();
  const ModuleOrder top = ModuleOrder::top(ring->order());
  std::vector<TermVec<F>> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < P.cols(); ++j)
    if (!P.column(j).empty()) {
      cols.push_back(P.column(j));
      degs.push_back(P.source().degrees[j]);
    }
  std::vector<bool> row_alive(P.rows(), true);
  std::vector<bool> col_alive(cols.size(), true);
  for (;;) {
    std::optional<std::pair<std::uint32_t, std::size_t>> pivot;
    for (std::size_t c = 0; c < cols.size() && !pivot; ++c) {
      if (!col_alive[c]) continue;
      for (const auto& t : cols[c])
        if (t.mono.is_one()) {
          pivot = {t.comp, c};
          break;
        }
    }
    if (!pivot) break;
    auto [r, c] = *pivot;
    typename F::Element u = field.zero();
    for (const auto& t : cols[c])
      if (t.comp == r) u = t.coef;
    for (std::size_t c2 = 0; c2 < cols.size(); ++c2) {
      if (c2 == c || !col_alive[c2]) continue;
      TermVec<F> entry;
      for (const auto& t : cols[c2])
        if (t.comp == r) entry.push_back(Term<F>{field.neg(field.div(t.coef, u)), t.mono, 0});
      if (entry.empty()) continue;
      cols[c2] = terms::add(field, top, cols[c2], terms::mul_poly(field, top, entry, cols[c]));
    }
    // Generator r is now expressed through the others: drop it everywhere.
    col_alive[c] = false;
    row_alive[r] = false;
    for (std::size_t c2 = 0; c2 < cols.size(); ++c2) {
      if (!col_alive[c2]) continue;
      std::erase_if(cols[c2], [&](const Term<F>& t) { return t.comp == r; });
    }
  }
  std::vector<std::uint32_t> renumber(P.rows(), UINT32_MAX);
  FreeModule target;
  for (std::size_t r = 0; r < P.rows(); ++r)
    if (row_alive[r]) {
      renumber[r] = static_cast<std::uint32_t>(target.rank());
      target.degrees.push_back(P.target().degrees[r]);
    }
  std::vector<TermVec<F>> out;
  std::vector<int> out_degs;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!col_alive[c] || cols[c].empty()) continue;
    TermVec<F> v;
    for (auto& t : cols[c]) v.push_back(Term<F>{t.coef, t.mono, renumber[t.comp]});
    terms::make_monic(field, v);
    out.push_back(std::move(v));
    out_degs.push_back(degs[c]);
  }
  return minimal_generators(Matrix<F>(ring, target, std::move(out), std::move(out_degs)));
}

template <CoefficientField F>
ModulePresentation<F> minimal_presentation(const ModulePresentation<F>& M) {
  return ModulePresentation<F>::cokernel(prune(present_as_cokernel(M)));
}

/// Presentation equality: same ambient free module, and equal generator and
/// relation submodules (compared through reduced Groebner bases). This is
/// not an isomorphism test.
template <CoefficientField F>
bool module_equals(const ModulePresentation<F>& a, const ModulePresentation<F>& b) {
  require_same_ring(a.ring(), b.ring());
  if (!(a.ambient() == b.ambient())) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return groebner(a.generators()).same_as(groebner(b.generators())) &&
         groebner(a.relations()).same_as(groebner(b.relations()));
}

}  // namespace scmkit
