#pragma once

// Test-only oracles (plain linear algebra over QQ, no Groebner bases) and
// the shared test corpus.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "scmkit/scmkit.hpp"

namespace oracle {

using scmkit::Monomial;
using Q = mpq_class;
using Row = std::map<int, Q>;
using F = scmkit::Rationals;

/// Rank by sparse Gaussian elimination; pivots on the smallest column index.
inline std::size_t rank(std::vector<Row> rows) {
  std::map<int, Row> pivots;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto [col, val] = *r.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        Q inv = 1 / val;
        for (auto& [c, v] : r) v *= inv;
        pivots.emplace(col, std::move(r));
        break;
      }
      Q f = val;
      for (const auto& [c, v] : it->second) {
        Q nv = r[c] - f * v;
        if (nv == 0) r.erase(c);
        else r[c] = nv;
      }
    }
  }
  return pivots.size();
}

/// Pivot columns of the echelon form (first nonzero column of each row).
inline std::set<int> pivot_columns(std::vector<Row> rows) {
  std::map<int, Row> pivots;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto [col, val] = *r.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        pivots.emplace(col, std::move(r));
        break;
      }
      Q f = val / it->second.begin()->second;
      for (const auto& [c, v] : it->second) {
        Q nv = r[c] - f * v;
        if (nv == 0) r.erase(c);
        else r[c] = nv;
      }
    }
  }
  std::set<int> out;
  for (auto& [c, r] : pivots) out.insert(c);
  return out;
}

/// Basis of the kernel of the linear map whose columns are `cols` (each a
/// sparse vector indexed by target coordinate); vectors over column indices.
inline std::vector<std::vector<Q>> kernel(const std::vector<Row>& cols, std::size_t ncols) {
  // Row-reduce the transpose system: unknowns = columns.
  std::map<int, Row> eqs;  // target coordinate -> row over unknowns
  for (std::size_t j = 0; j < ncols; ++j)
    for (const auto& [r, v] : cols[j]) eqs[r][static_cast<int>(j)] = v;
  std::vector<Row> rows;
  for (auto& [r, row] : eqs) rows.push_back(row);
  // reduced row echelon
  std::vector<Row> ech;
  std::vector<int> piv;
  for (auto& r : rows) {
    for (std::size_t k = 0; k < ech.size(); ++k) {
      auto it = r.find(piv[k]);
      if (it == r.end()) continue;
      Q f = it->second;
      for (const auto& [c, v] : ech[k]) {
        Q nv = r[c] - f * v;
        if (nv == 0) r.erase(c);
        else r[c] = nv;
      }
    }
    if (r.empty()) continue;
    auto [pc, pv] = *r.begin();
    Q inv = 1 / pv;
    for (auto& [c, v] : r) v *= inv;
    for (auto& e : ech) {
      auto it = e.find(pc);
      if (it == e.end()) continue;
      Q f = it->second;
      for (const auto& [c, v] : r) {
        Q nv = e[c] - f * v;
        if (nv == 0) e.erase(c);
        else e[c] = nv;
      }
    }
    ech.push_back(std::move(r));
    piv.push_back(pc);
  }
  std::set<int> pivset(piv.begin(), piv.end());
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivset.count(static_cast<int>(f))) continue;
    std::vector<Q> v(ncols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < ech.size(); ++k) {
      auto it = ech[k].find(static_cast<int>(f));
      if (it != ech[k].end()) v[piv[k]] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// All exponent vectors of total degree d in n variables, by recursion.
inline std::vector<std::vector<int>> exponents_of_degree(std::size_t n, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == n) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  for (const auto& e : exponents_of_degree(n, d)) out.emplace_back(std::span<const int>(e));
  return out;
}

inline Monomial times(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) e[v] = a[v] + b[v];
  return Monomial(std::span<const int>(e));
}

inline bool divides_oracle(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

/// Coordinates for the degree-delta part of a graded free module.
class GradedPiece {
 public:
  GradedPiece(std::size_t n, const std::vector<int>& gen_degrees, int delta) {
    for (std::size_t c = 0; c < gen_degrees.size(); ++c)
      for (const auto& m : monomials_of_degree(n, delta - gen_degrees[c])) {
        std::vector<int> key(m.size());
        for (std::size_t v = 0; v < m.size(); ++v) key[v] = m[v];
        key.push_back(static_cast<int>(c));
        index_.emplace(key, static_cast<int>(index_.size()));
      }
  }
  std::size_t size() const { return index_.size(); }
  int at(const Monomial& m, std::uint32_t comp) const {
    std::vector<int> key(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) key[v] = m[v];
    key.push_back(static_cast<int>(comp));
    return index_.at(key);
  }

 private:
  std::map<std::vector<int>, int> index_;
};

/// Rows spanning the degree-delta part of the submodule generated by `gens`
/// (given with their degrees), in the coordinates of `piece`.
inline std::vector<Row> submodule_rows(std::size_t n, const std::vector<scmkit::TermVec<F>>& gens,
                                       const std::vector<int>& degs, int delta, const GradedPiece& piece) {
  std::vector<Row> rows;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].empty()) continue;
    for (const auto& m : monomials_of_degree(n, delta - degs[g])) {
      Row r;
      for (const auto& t : gens[g]) {
        Q& slot = r[piece.at(times(m, t.mono), t.comp)];
        slot += t.coef;
        if (slot == 0) r.erase(piece.at(times(m, t.mono), t.comp));
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  return rows;
}

/// Kernel of the chosen columns of A in internal degree `delta`: one vector
/// of polynomial coefficients per basis element.
inline std::vector<std::vector<scmkit::Poly<F>>> syzygies_in_degree(const scmkit::Matrix<F>& A,
                                                                   const std::vector<std::uint32_t>& chosen,
                                                                   int delta) {
  const auto& R = A.ring();
  const std::size_t n = R->nvars();
  GradedPiece dst(n, A.target().degrees, delta);
  std::vector<std::pair<std::size_t, Monomial>> basis;
  std::vector<Row> cols;
  for (std::size_t k = 0; k < chosen.size(); ++k)
    for (const auto& m : monomials_of_degree(n, delta - A.source().degrees[chosen[k]])) {
      basis.emplace_back(k, m);
      Row col;
      for (const auto& t : A.column(chosen[k])) col[dst.at(times(m, t.mono), t.comp)] += t.coef;
      cols.push_back(col);
    }
  std::vector<std::vector<scmkit::Poly<F>>> out;
  for (const auto& v : kernel(cols, basis.size())) {
    std::vector<scmkit::Poly<F>> s(chosen.size(), scmkit::Poly<F>(R));
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) s[basis[k].first] = s[basis[k].first] + scmkit::Poly<F>::monomial(R, v[k], basis[k].second);
    out.push_back(std::move(s));
  }
  return out;
}

/// The 1 x k matrix of the generators of I.
inline scmkit::Matrix<F> row_matrix(const scmkit::Ideal<F>& I) {
  std::vector<scmkit::TermVec<F>> cols;
  for (const auto& g : I.gens()) cols.push_back(g.terms());
  return scmkit::Matrix<F>(I.ring(), scmkit::FreeModule::free(1), cols);
}

/// Degree of the lcm of the generators of a monomial ideal; Koszul homology
/// of S/I vanishes above it.
inline int lcm_degree(const scmkit::Ideal<F>& I) {
  std::vector<int> e(I.ring()->nvars(), 0);
  for (const auto& g : I.gens())
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max<int>(e[v], g.lead_monomial()[v]);
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Graded Betti numbers of coker(P) from Koszul homology, for internal
/// degrees j <= max_degree. beta[{i, j}].
inline std::map<std::pair<int, int>, std::size_t> koszul_betti(const scmkit::Matrix<F>& P, int max_degree) {
  const std::size_t n = P.ring()->nvars();
  const auto& fdeg = P.target().degrees;
  std::vector<scmkit::TermVec<F>> gens = P.columns();
  std::vector<int> gdeg = P.source().degrees;
  // subsets of {0..n-1} by size, as sorted vectors
  std::vector<std::vector<std::vector<int>>> subsets(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(static_cast<int>(v));
    subsets[s.size()].push_back(s);
  }
  auto subset_index = [&](const std::vector<int>& s) {
    const auto& list = subsets[s.size()];
    return static_cast<int>(std::find(list.begin(), list.end(), s) - list.begin());
  };
  // dims and ranks for the complex in internal degree j
  std::map<std::pair<int, int>, std::size_t> beta;
  int min_deg = fdeg.empty() ? 0 : *std::min_element(fdeg.begin(), fdeg.end());
  for (int j = min_deg; j <= max_degree; ++j) {
    // C_i = wedge^i (x) F_{j-i}
    std::vector<std::size_t> dimC(n + 2, 0), dimN(n + 2, 0), rk(n + 2, 0);
    std::vector<GradedPiece> pieces;
    for (std::size_t i = 0; i <= n; ++i) pieces.emplace_back(n, fdeg, j - static_cast<int>(i));
    std::vector<std::size_t> nsub(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& pc = pieces[i];
      std::size_t nrank = rank(submodule_rows(n, gens, gdeg, j - static_cast<int>(i), pc));
      nsub[i] = nrank;
      dimC[i] = subsets[i].size() * (pc.size() - nrank);
    }
    // rank of the induced map C_i -> C_{i-1} on quotients
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& src = pieces[i];
      const auto& dst = pieces[i - 1];
      const int dst_size = static_cast<int>(dst.size());
      auto nrows = submodule_rows(n, gens, gdeg, j - static_cast<int>(i) + 1, dst);
      std::vector<Row> rows;
      for (std::size_t b = 0; b < subsets[i - 1].size(); ++b)
        for (const auto& r : nrows) {
          Row shifted;
          for (const auto& [c, v] : r) shifted[static_cast<int>(b) * dst_size + c] = v;
          rows.push_back(std::move(shifted));
        }
      const std::size_t base = rank(rows);
      for (const auto& A : subsets[i])
        for (std::size_t c = 0; c < fdeg.size(); ++c)
          for (const auto& m : monomials_of_degree(n, j - static_cast<int>(i) - fdeg[c])) {
            (void)src;
            Row r;
            for (std::size_t k = 0; k < A.size(); ++k) {
              std::vector<int> rest = A;
              rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
              Monomial xm = times(m, Monomial::variable(n, static_cast<std::size_t>(A[k])));
              int col = subset_index(rest) * dst_size + dst.at(xm, static_cast<std::uint32_t>(c));
              r[col] += (k % 2 == 0) ? 1 : -1;
            }
            rows.push_back(std::move(r));
          }
      rk[i] = rank(rows) - base;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      long b = static_cast<long>(dimC[i]) - static_cast<long>(rk[i]) - static_cast<long>(rk[i + 1]);
      if (b > 0) beta[{static_cast<int>(i), j}] = static_cast<std::size_t>(b);
    }
  }
  return beta;
}

inline int projective_dimension_from(const std::map<std::pair<int, int>, std::size_t>& beta) {
  int pd = -1;
  for (const auto& [k, v] : beta) pd = std::max(pd, k.first);
  return pd;
}

/// Leading monomials of the degree-delta part of an ideal, from row echelon
/// form of its Macaulay matrix with columns in decreasing monomial order.
inline std::set<std::vector<int>> initial_monomials(const scmkit::Ideal<F>& I, int delta) {
  const std::size_t n = I.ring()->nvars();
  auto mons = monomials_of_degree(n, delta);
  std::sort(mons.begin(), mons.end(),
            [&](const Monomial& a, const Monomial& b) { return I.ring()->order().compare(a, b) > 0; });
  std::map<std::vector<int>, int> col;
  auto key = [](const Monomial& m) {
    std::vector<int> k(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) k[v] = m[v];
    return k;
  };
  for (std::size_t c = 0; c < mons.size(); ++c) col[key(mons[c])] = static_cast<int>(c);
  std::vector<Row> rows;
  for (const auto& g : I.gens())
    for (const auto& m : monomials_of_degree(n, delta - g.degree())) {
      Row r;
      for (const auto& t : g.terms()) r[col.at(key(times(m, t.mono)))] += t.coef;
      rows.push_back(std::move(r));
    }
  std::set<std::vector<int>> out;
  for (int c : pivot_columns(rows)) out.insert(key(mons[c]));
  return out;
}

/// Membership of a monomial in a monomial ideal by direct divisibility.
inline bool monomial_in(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides_oracle(g, m); });
}

/// Largest dim S/P over monomial primes P = (x_v : v in V) containing I,
/// by trying every variable subset.
inline int brute_force_dim(std::size_t n, const std::vector<Monomial>& gens) {
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool contains = std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] && (mask >> v & 1)) return true;
      return false;
    });
    if (contains) best = std::max(best, static_cast<int>(n) - __builtin_popcount(mask));
  }
  return best;
}

}  // namespace oracle

namespace corpus {

using F = scmkit::Rationals;
using scmkit::Ideal;
using scmkit::Monomial;
using scmkit::Poly;

inline scmkit::RingPtr<F> ring(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t v = 1; v <= n; ++v) names.push_back(prefix + std::to_string(v));
  return scmkit::make_ring(F{}, names);
}

inline scmkit::RingPtr<F> edge_ring(int n) {
  std::vector<std::string> names;
  for (int v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
  for (int v = 1; v <= n; ++v) names.push_back("y" + std::to_string(v));
  return scmkit::make_ring(F{}, names);
}

inline Poly<F> mono(const scmkit::RingPtr<F>& R, std::initializer_list<int> e) {
  return Poly<F>::monomial(R, 1, Monomial(e));
}

/// Random monomial ideal: n variables, up to max_gens generators of degree
/// 1..max_deg, never the unit ideal.
inline Ideal<F> random_monomial_ideal(std::mt19937& rng, std::size_t n, int max_gens, int max_deg) {
  auto R = ring(n);
  std::uniform_int_distribution<int> ngen(1, max_gens), deg(1, max_deg), var(0, static_cast<int>(n) - 1);
  std::vector<Poly<F>> gens;
  const int k = ngen(rng);
  for (int g = 0; g < k; ++g) {
    std::vector<int> e(n, 0);
    const int d = deg(rng);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    gens.push_back(Poly<F>::monomial(R, 1, Monomial(std::span<const int>(e))));
  }
  return Ideal<F>(R, gens);
}

struct Named {
  std::string name;
  Ideal<F> ideal;
};

inline Ideal<F> path_edge_ideal(int n) {
  std::vector<scmkit::Graph::Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(v, v + 1);
  return scmkit::binomial_edge_ideal(scmkit::Graph(n, es), edge_ring(n));
}

/// Fixed monomial corpus: (x^2, xy), (x1x2, x3x4) and seeded random ideals.
inline std::vector<Named> monomial_corpus(int random_count = 20, unsigned seed = 20240611) {
  std::vector<Named> out;
  auto R2 = scmkit::make_ring(F{}, {"x", "y"});
  out.push_back({"(x^2,xy)", Ideal<F>(R2, {mono(R2, {2, 0}), mono(R2, {1, 1})})});
  auto R5 = ring(5);
  out.push_back({"(x1x2,x3x4)", Ideal<F>(R5, {mono(R5, {1, 1, 0, 0, 0}), mono(R5, {0, 0, 1, 1, 0})})});
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nv(2, 4);
  for (int k = 0; k < random_count; ++k) {
    auto I = random_monomial_ideal(rng, static_cast<std::size_t>(nv(rng)), 5, 3);
    out.push_back({"random#" + std::to_string(k) + " " + I.to_string(), I});
  }
  return out;
}

}  // namespace corpus
