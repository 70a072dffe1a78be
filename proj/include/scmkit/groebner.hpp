#pragma once

// Buchberger's algorithm for submodules of graded free modules (ideals are
// the rank-one case), normal forms, and the ideal operations built on them.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scmkit/module.hpp"
#include "scmkit/linalg.hpp"
#include "scmkit/reduce.hpp"

namespace scmkit {

namespace detail {

template <CoefficientField F>
void normalize_inputs(const F& field, const ModuleOrder& order, std::vector<TermVec<F>>& gens) {
  std::vector<TermVec<F>> out;
  for (auto& g : gens) {
    if (!terms::is_sorted<F>(order, g)) terms::normalize(field, order, g);
    if (g.empty()) continue;
    terms::make_monic(field, g);
    out.push_back(std::move(g));
  }
  gens = std::move(out);
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int degree;
};

}  // namespace detail

/// Reduced Groebner basis (monic, sorted by decreasing lead term) of the
/// submodule generated by `gens` inside a free module whose generator
/// degrees are `degrees`. `ideal_case` enables the coprime-lead criterion,
/// which is only valid in rank one.
template <CoefficientField F>
std::vector<TermVec<F>> buchberger(const F& field, const ModuleOrder& order, std::vector<TermVec<F>> gens,
                                   const std::vector<int>& degrees, bool ideal_case) {
  using detail::CriticalPair;
  detail::normalize_inputs(field, order, gens);

  std::vector<TermVec<F>> basis;
  basis.reserve(gens.size() * 2);
  std::vector<bool> active;
  DivisorIndex index;
  std::vector<const TermVec<F>*> divisors;

  auto pair_less = [&order](const CriticalPair& a, const CriticalPair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (int c = order.compare(a.lcm, a.comp, b.lcm, b.comp)) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<CriticalPair, decltype(pair_less)> pairs(pair_less);

  auto lead = [&](std::size_t k) -> const Term<F>& { return basis[k].front(); };
  auto comp_degree = [&](std::uint32_t c) { return c < degrees.size() ? degrees[c] : 0; };

  auto insert = [&](TermVec<F> h) {
    const std::size_t t = basis.size();
    basis.push_back(std::move(h));
    active.push_back(true);
    divisors.clear();
    for (const auto& b : basis) divisors.push_back(&b);
    index.add(basis[t].front().mono, basis[t].front().comp, t);

    const Monomial& lt = lead(t).mono;
    const std::uint32_t ct = lead(t).comp;

    // Becker-Weispfenning UPDATE.
    std::vector<CriticalPair> candidates;
    for (std::size_t i = 0; i < t; ++i) {
      if (!active[i] || lead(i).comp != ct) continue;
      Monomial l = lcm(lead(i).mono, lt);
      int d = l.degree() + comp_degree(ct);
      candidates.push_back(CriticalPair{i, t, std::move(l), ct, d});
    }
    auto is_coprime = [&](const CriticalPair& p) {
      return ideal_case && coprime(lead(p.i).mono, lead(p.j).mono);
    };
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      bool drop = false;
      if (!is_coprime(p)) {
        for (std::size_t b = a + 1; b < candidates.size() && !drop; ++b)
          if (divides(candidates[b].lcm, p.lcm)) drop = true;
        for (const auto& q : kept)
          if (!drop && divides(q.lcm, p.lcm)) drop = true;
      }
      if (!drop) kept.push_back(p);
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      const auto& p = *it;
      if (p.comp == ct && divides(lt, p.lcm)) {
        Monomial l1 = lcm(lead(p.i).mono, lt), l2 = lcm(lead(p.j).mono, lt);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
          it = pairs.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (auto& p : kept)
      if (!is_coprime(p)) pairs.insert(std::move(p));
    for (std::size_t i = 0; i < t; ++i)
      if (active[i] && lead(i).comp == ct && divides(lt, lead(i).mono)) active[i] = false;
  };

  // Inputs are fed in increasing degree so the driver stays degree by degree.
  std::vector<std::size_t> order_in(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) order_in[k] = k;
  auto gen_degree = [&](const TermVec<F>& g) { return g.front().mono.degree() + comp_degree(g.front().comp); };
  std::stable_sort(order_in.begin(), order_in.end(),
                   [&](std::size_t a, std::size_t b) { return gen_degree(gens[a]) < gen_degree(gens[b]); });
  std::size_t next_input = 0;

  while (next_input < order_in.size() || !pairs.empty()) {
    bool take_input = next_input < order_in.size() &&
                      (pairs.empty() || gen_degree(gens[order_in[next_input]]) <= pairs.begin()->degree);
    TermVec<F> h;
    if (take_input) {
      const auto& g = gens[order_in[next_input++]];
      h = basis.empty() ? g : reduce(field, order, g, divisors, index, ReduceMode::Full);
    } else {
      CriticalPair p = *pairs.begin();
      pairs.erase(pairs.begin());
      std::vector<Summand<F>> s;
      s.push_back(Summand<F>{field.one(), quotient(p.lcm, lead(p.i).mono), &basis[p.i], 1});
      s.push_back(Summand<F>{field.neg(field.one()), quotient(p.lcm, lead(p.j).mono), &basis[p.j], 1});
      h = reduce(field, order, std::move(s), divisors, index, ReduceMode::Full);
    }
    if (h.empty()) continue;
    terms::make_monic(field, h);
    insert(std::move(h));
  }

  // Minimal basis, then reduce tails.
  std::vector<TermVec<F>> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (active[k]) minimal.push_back(std::move(basis[k]));
  DivisorIndex min_index;
  std::vector<const TermVec<F>*> min_divs;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    min_index.add(minimal[k].front().mono, minimal[k].front().comp, k);
    min_divs.push_back(&minimal[k]);
  }
  for (auto& g : minimal) {
    if (g.size() == 1) continue;
    TermVec<F> tail(g.begin() + 1, g.end());
    TermVec<F> r = reduce(field, order, tail, min_divs, min_index, ReduceMode::Full);
    r.insert(r.begin(), g.front());
    g = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const TermVec<F>& a, const TermVec<F>& b) {
    return order.compare(a.front(), b.front()) > 0;
  });
  return minimal;
}

/// A reduced Groebner basis together with its divisor index.
template <CoefficientField F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, FreeModule ambient, ModuleOrder order, std::vector<TermVec<F>> basis)
      : ring_(std::move(ring)), ambient_(std::move(ambient)), order_(std::move(order)), basis_(std::move(basis)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      index_.add(basis_[k].front().mono, basis_[k].front().comp, k);
      divisors_.push_back(&basis_[k]);
    }
  }
  GroebnerBasis(const GroebnerBasis& o) : GroebnerBasis(o.ring_, o.ambient_, o.order_, o.basis_) {}
  GroebnerBasis& operator=(const GroebnerBasis&) = delete;

  const RingPtr<F>& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<TermVec<F>>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }

  /// Unique representative of f modulo the submodule. `f` may be unsorted.
  TermVec<F> normal_form(TermVec<F> f) const {
    if (!terms::is_sorted<F>(order_, f)) terms::normalize(ring_->field(), order_, f);
    return reduce(ring_->field(), order_, f, divisors_, index_, ReduceMode::Full);
  }
  Vec<F> normal_form(const Vec<F>& f) const {
    check(f);
    return Vec<F>(ring_, ambient_, normal_form(f.terms()));
  }

  bool contains(const TermVec<F>& f) const { return normal_form(f).empty(); }
  bool contains(const Vec<F>& f) const {
    check(f);
    return contains(f.terms());
  }

  /// Leading monomials landing in component c.
  std::vector<Monomial> leads_in(std::uint32_t c) const {
    std::vector<Monomial> out;
    for (const auto& g : basis_)
      if (g.front().comp == c) out.push_back(g.front().mono);
    return out;
  }

  /// Syntactic equality of reduced bases.
  bool same_as(const GroebnerBasis& o) const {
    if (basis_.size() != o.basis_.size()) return false;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (!terms::equal(ring_->field(), basis_[k], o.basis_[k])) return false;
    return true;
  }

 private:
  void check(const Vec<F>& f) const {
    require_same_ring(ring_, f.ring());
    if (!(f.ambient() == ambient_)) throw std::invalid_argument("ambient module mismatch");
  }

  RingPtr<F> ring_;
  FreeModule ambient_;
  ModuleOrder order_;
  std::vector<TermVec<F>> basis_;
  DivisorIndex index_;
  std::vector<const TermVec<F>*> divisors_;
};

/// GB of the column span of `gens` (each a term list in `ambient`), under
/// term-over-position with the ring order unless another order is given.
template <CoefficientField F>
GroebnerBasis<F> groebner(const RingPtr<F>& ring, const FreeModule& ambient, std::vector<TermVec<F>> gens,
                          std::optional<ModuleOrder> order = std::nullopt) {
  ModuleOrder ord = order ? *order : ModuleOrder::top(ring->order());
  for (const auto& g : gens)
    for (const auto& t : g)
      if (t.comp >= ambient.rank()) throw std::invalid_argument("generator outside the ambient module");
  auto basis = buchberger(ring->field(), ord, std::move(gens), ambient.degrees, ambient.rank() == 1);
  return GroebnerBasis<F>(ring, ambient, ord, std::move(basis));
}

template <CoefficientField F>
GroebnerBasis<F> groebner(const std::vector<Vec<F>>& gens) {
  if (gens.empty()) throw std::invalid_argument("groebner: need the ambient module; pass it explicitly");
  std::vector<TermVec<F>> ts;
  for (const auto& g : gens) {
    if (!(g.ambient() == gens.front().ambient())) throw std::invalid_argument("ambient mismatch");
    require_same_ring(g.ring(), gens.front().ring());
    ts.push_back(g.terms());
  }
  return groebner(gens.front().ring(), gens.front().ambient(), std::move(ts));
}

template <CoefficientField F>
GroebnerBasis<F> groebner(const Matrix<F>& m) {
  return groebner(m.ring(), m.target(), m.columns());
}

/// Every S-pair of `basis` reduces to zero (Buchberger's criterion).
template <CoefficientField F>
bool is_groebner_basis(const F& field, const ModuleOrder& order, std::vector<TermVec<F>> basis) {
  detail::normalize_inputs(field, order, basis);
  DivisorIndex index;
  std::vector<const TermVec<F>*> divs;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.add(basis[k].front().mono, basis[k].front().comp, k);
    divs.push_back(&basis[k]);
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i].front();
      const auto& b = basis[j].front();
      if (a.comp != b.comp) continue;
      Monomial l = lcm(a.mono, b.mono);
      std::vector<Summand<F>> s;
      s.push_back(Summand<F>{field.one(), quotient(l, a.mono), &basis[i], 1});
      s.push_back(Summand<F>{field.neg(field.one()), quotient(l, b.mono), &basis[j], 1});
      if (!reduce(field, order, std::move(s), divs, index, ReduceMode::Top).empty()) return false;
    }
  return true;
}

/// Result of a Groebner computation that records, for every basis element,
/// its expression in the input generators.
template <CoefficientField F>
struct CertifiedBasis {
  std::vector<TermVec<F>> basis;         // in the ambient module
  std::vector<TermVec<F>> certificates;  // coefficients on the inputs, comp = input index
};

/// Groebner basis of the graph module {(g, e_g)}: elements leading in the
/// ambient block carry their own certificate in the second block.
template <CoefficientField F>
CertifiedBasis<F> certified_groebner(const RingPtr<F>& ring, const FreeModule& ambient,
                                     const std::vector<TermVec<F>>& gens) {
  const auto r = static_cast<std::uint32_t>(ambient.rank());
  std::vector<int> degrees = ambient.degrees;
  std::vector<TermVec<F>> stacked;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    TermVec<F> v = gens[j];
    auto d = homogeneous_degree<F>(v, ambient);
    degrees.push_back(d ? *d : 0);
    v.push_back(Term<F>{ring->field().one(), ring->one_monomial(), r + static_cast<std::uint32_t>(j)});
    stacked.push_back(std::move(v));
  }
  auto order = ModuleOrder::block_top(ring->order(), r);
  auto gb = buchberger(ring->field(), order, std::move(stacked), degrees, false);
  CertifiedBasis<F> out;
  for (auto& g : gb) {
    if (g.front().comp >= r) continue;
    TermVec<F> head, cert;
    for (auto& t : g) {
      if (t.comp < r) head.push_back(t);
      else cert.push_back(Term<F>{t.coef, t.mono, t.comp - r});
    }
    out.basis.push_back(std::move(head));
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

/// Generators of the kernel of the map given by the columns of `a`.
/// The result is a Groebner basis of the syzygy module (not minimized).
template <CoefficientField F>
Matrix<F> syzygies_gb(const Matrix<F>& a) {
  const auto& ring = a.ring();
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_homogeneous<F>(a.column(j), a.target()))
      throw std::invalid_argument("syzygies: column " + std::to_string(j) + " is not homogeneous");
  const auto r = static_cast<std::uint32_t>(a.rows());
  std::vector<int> degrees = a.target().degrees;
  degrees.insert(degrees.end(), a.source().degrees.begin(), a.source().degrees.end());
  std::vector<TermVec<F>> stacked;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    TermVec<F> v = a.column(j);
    v.push_back(Term<F>{ring->field().one(), ring->one_monomial(), r + static_cast<std::uint32_t>(j)});
    stacked.push_back(std::move(v));
  }
  auto order = ModuleOrder::block_top(ring->order(), r);
  auto gb = buchberger(ring->field(), order, std::move(stacked), degrees, false);
  std::vector<TermVec<F>> syz;
  for (auto& g : gb) {
    if (g.front().comp < r) continue;
    TermVec<F> s;
    for (auto& t : g) s.push_back(Term<F>{t.coef, t.mono, t.comp - r});
    syz.push_back(std::move(s));
  }
  return Matrix<F>(ring, a.source(), std::move(syz));
}

struct TermKeyLess {
  bool operator()(const std::pair<std::uint32_t, Monomial>& a, const std::pair<std::uint32_t, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return MonomialOrder::lex().compare(a.second, b.second) < 0;
  }
};

/// A minimal homogeneous generating set of the column span, chosen greedily
/// by increasing degree: in each degree, a column is kept when its normal
/// form modulo the lower-degree part is independent of the columns kept so
/// far in that degree.
template <CoefficientField F>
Matrix<F> minimal_generators(const Matrix<F>& m) {
  const F& field = m.ring()->field();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.column(j).empty()) idx.push_back(j);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return m.source().degrees[a] < m.source().degrees[b];
  });
  std::vector<TermVec<F>> kept;
  std::vector<int> kept_deg;
  for (std::size_t lo = 0; lo < idx.size();) {
    const int deg = m.source().degrees[idx[lo]];
    std::size_t hi = lo;
    while (hi < idx.size() && m.source().degrees[idx[hi]] == deg) ++hi;
    std::optional<GroebnerBasis<F>> below;
    if (!kept.empty()) below.emplace(groebner(m.ring(), m.target(), kept));
    std::map<std::pair<std::uint32_t, Monomial>, std::uint32_t, TermKeyLess> coords;
    EchelonForm<F> span(field);
    for (std::size_t k = lo; k < hi; ++k) {
      const TermVec<F>& col = m.column(idx[k]);
      TermVec<F> nf = below ? below->normal_form(col) : col;
      SparseVector<F> v;
      for (const auto& t : nf) {
        auto [it, fresh] = coords.try_emplace({t.comp, t.mono}, static_cast<std::uint32_t>(coords.size()));
        v.emplace_back(it->second, t.coef);
      }
      if (!v.empty() && span.insert(std::move(v))) {
        kept.push_back(col);
        kept_deg.push_back(deg);
      }
    }
    lo = hi;
  }
  return Matrix<F>(m.ring(), m.target(), std::move(kept), std::move(kept_deg));
}

/// Kernel of the map given by the columns of `a`, minimally generated.
template <CoefficientField F>
Matrix<F> syzygy_module(const Matrix<F>& a) {
  return minimal_generators(syzygies_gb(a));
}

// ---------------------------------------------------------------------------
// Ideals

namespace detail {
template <CoefficientField F>
struct GbCell {
  std::once_flag once;
  std::unique_ptr<const GroebnerBasis<F>> gb;
};
}  // namespace detail

/// Homogeneous ideal of a polynomial ring with a lazily computed, shared,
/// write-once reduced Groebner basis.
template <CoefficientField F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Poly<F>> gens, bool require_homogeneous = true)
      : ring_(std::move(ring)), cell_(std::make_shared<detail::GbCell<F>>()) {
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (require_homogeneous && !g.is_homogeneous())
        throw std::invalid_argument("ideal generator " + g.to_string() + " is not homogeneous");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(RingPtr<F> ring) {
    auto one = Poly<F>::constant(ring, 1);
    return Ideal(ring, {one});
  }
  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly<F>>& gens() const { return gens_; }

  const GroebnerBasis<F>& gb() const {
    std::call_once(cell_->once, [this] {
      std::vector<TermVec<F>> ts;
      for (const auto& g : gens_) ts.push_back(g.terms());
      cell_->gb = std::make_unique<const GroebnerBasis<F>>(groebner(ring_, FreeModule::free(1), std::move(ts)));
    });
    return *cell_->gb;
  }

  /// Reduced Groebner basis as polynomials, decreasing lead terms.
  std::vector<Poly<F>> basis() const {
    std::vector<Poly<F>> out;
    for (const auto& g : gb().elements()) out.emplace_back(ring_, g);
    return out;
  }

  Poly<F> normal_form(const Poly<F>& f) const {
    require_same_ring(ring_, f.ring());
    return Poly<F>(ring_, gb().normal_form(f.terms()));
  }
  bool contains(const Poly<F>& f) const { return normal_form(f).is_zero(); }

  bool is_subset_of(const Ideal& o) const {
    require_same_ring(ring_, o.ring_);
    return std::all_of(gens_.begin(), gens_.end(), [&](const Poly<F>& g) { return o.contains(g); });
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& b = gb().elements();
    return b.size() == 1 && b.front().front().mono.is_one();
  }
  bool is_monomial() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Poly<F>& g) { return g.is_monomial(); });
  }

  /// Equality as ideals: reduced Groebner bases coincide.
  friend bool operator==(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.gb().same_as(b.gb());
  }

  /// The same ideal generated by its reduced Groebner basis.
  Ideal canonical() const { return Ideal(ring_, basis()); }

  std::string to_string() const {
    std::string s = "ideal (";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

 private:
  RingPtr<F> ring_;
  std::vector<Poly<F>> gens_;
  std::shared_ptr<detail::GbCell<F>> cell_;
};

template <CoefficientField F>
bool ideal_equals(const Ideal<F>& a, const Ideal<F>& b) {
  return a == b;
}

namespace detail {

/// Monomial generators with those divisible by another removed (first kept
/// among equal ones).
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : ms) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

template <CoefficientField F>
Ideal<F> monomial_ideal(const RingPtr<F>& ring, const std::vector<Monomial>& ms) {
  std::vector<Poly<F>> gens;
  for (const auto& m : ms) gens.push_back(Poly<F>::monomial(ring, ring->field().one(), m));
  return Ideal<F>(ring, std::move(gens));
}

template <CoefficientField F>
std::vector<Monomial> monomials_of(const Ideal<F>& I) {
  std::vector<Monomial> ms;
  for (const auto& g : I.gens()) ms.push_back(g.lead_monomial());
  return ms;
}

/// I ∩ J by elimination: the t-free part of t*I + (1-t)*J in K[t, x].
template <CoefficientField F>
Ideal<F> intersect_by_elimination(const Ideal<F>& I, const Ideal<F>& J) {
  const auto& ring = I.ring();
  const F& k = ring->field();
  const std::size_t n = ring->nvars();
  auto lift = [&](const Monomial& m, int t_power) {
    Monomial r(n + 1);
    r.set(0, t_power);
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) r.set(v + 1, m[v]);
    return r;
  };
  std::vector<TermVec<F>> gens;
  for (const auto& g : I.gens()) {
    TermVec<F> v;
    for (const auto& t : g.terms()) v.push_back(Term<F>{t.coef, lift(t.mono, 1), 0});
    gens.push_back(std::move(v));
  }
  for (const auto& h : J.gens()) {
    TermVec<F> v;
    for (const auto& t : h.terms()) {
      v.push_back(Term<F>{t.coef, lift(t.mono, 0), 0});
      v.push_back(Term<F>{k.neg(t.coef), lift(t.mono, 1), 0});
    }
    gens.push_back(std::move(v));
  }
  auto order = ModuleOrder::top(MonomialOrder::elimination(1));
  auto gb = buchberger(k, order, std::move(gens), {0}, true);
  std::vector<Poly<F>> out;
  for (const auto& g : gb) {
    if (g.front().mono[0] != 0) continue;
    TermVec<F> ts;
    for (const auto& t : g) {
      Monomial m(n);
      for (std::size_t v = 0; v < n; ++v)
        if (t.mono[v + 1]) m.set(v, t.mono[v + 1]);
      ts.push_back(Term<F>{t.coef, std::move(m), 0});
    }
    out.emplace_back(ring, std::move(ts));
  }
  return Ideal<F>(ring, std::move(out));
}

}  // namespace detail

/// Intersection of a nonempty list of ideals (left fold). Monomial ideals use
/// the lcm rule; anything else goes through elimination.
template <CoefficientField F>
Ideal<F> intersect(const std::vector<Ideal<F>>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty list of ideals");
  for (const auto& I : ideals) require_same_ring(I.ring(), ideals.front().ring());
  Ideal<F> acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    const Ideal<F>& J = ideals[k];
    if (acc.is_unit()) {
      acc = J;
      continue;
    }
    if (J.is_unit()) continue;
    if (acc.is_zero() || J.is_zero()) {
      acc = Ideal<F>::zero(acc.ring());
      continue;
    }
    if (acc.is_monomial() && J.is_monomial()) {
      std::vector<Monomial> ms;
      for (const auto& a : detail::monomials_of(acc))
        for (const auto& b : detail::monomials_of(J)) ms.push_back(lcm(a, b));
      acc = detail::monomial_ideal(acc.ring(), detail::minimalize_monomials(std::move(ms)));
    } else {
      acc = detail::intersect_by_elimination(acc, J);
    }
  }
  return acc;
}

template <CoefficientField F>
Ideal<F> operator+(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal<F>(a.ring(), std::move(gens));
}

}  // namespace scmkit
