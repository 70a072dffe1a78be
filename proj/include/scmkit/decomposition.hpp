#pragma once

// Primary decompositions: computed for monomial ideals and binomial edge
// ideals, checked-and-trusted for user-supplied components.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scmkit/graph.hpp"
#include "scmkit/resolution.hpp"

namespace scmkit {

template <CoefficientField F>
struct PrimaryComponent {
  Ideal<F> primary;
  Ideal<F> radical;
  int dim;  // dim S/radical
};

enum class Provenance { MonomialComputed, BinomialEdgeComputed, UserSupplied };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::MonomialComputed: return "monomial";
    case Provenance::BinomialEdgeComputed: return "binomial-edge";
    case Provenance::UserSupplied: return "user";
  }
  return "?";
}

template <CoefficientField F>
class Decomposition {
 public:
  Decomposition(Ideal<F> target, std::vector<PrimaryComponent<F>> components, Provenance provenance,
                std::vector<std::string> warnings = {})
      : target_(std::move(target)),
        components_(std::move(components)),
        provenance_(provenance),
        warnings_(std::move(warnings)) {}

  const Ideal<F>& target() const { return target_; }
  const std::vector<PrimaryComponent<F>>& components() const { return components_; }
  Provenance provenance() const { return provenance_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Intersection of the primary components (the target, by construction).
  Ideal<F> intersection() const {
    std::vector<Ideal<F>> qs;
    for (const auto& c : components_) qs.push_back(c.primary);
    return intersect(qs);
  }

  /// Same components in a different order.
  Decomposition permuted(const std::vector<std::size_t>& perm) const {
    std::vector<PrimaryComponent<F>> cs;
    for (std::size_t k : perm) cs.push_back(components_.at(k));
    return Decomposition(target_, std::move(cs), provenance_, warnings_);
  }

 private:
  Ideal<F> target_;
  std::vector<PrimaryComponent<F>> components_;
  Provenance provenance_;
  std::vector<std::string> warnings_;
};

namespace detail {

/// Irreducible monomial ideal as exponent per variable (0 = absent).
using PurePowers = std::vector<int>;

inline bool pure_contains(const PurePowers& a, const PurePowers& b) {  // a ⊇ b
  for (std::size_t v = 0; v < a.size(); ++v)
    if (b[v] && (!a[v] || a[v] > b[v])) return false;
  return true;
}

/// Irredundant irreducible components of a monomial ideal given by minimal
/// generators.
inline std::vector<PurePowers> irreducible_components(std::size_t n, const std::vector<Monomial>& gens) {
  std::vector<PurePowers> out;
  std::vector<std::vector<Monomial>> stack{minimalize_monomials(gens)};
  while (!stack.empty()) {
    auto ms = std::move(stack.back());
    stack.pop_back();
    auto it = std::find_if(ms.begin(), ms.end(), [](const Monomial& m) { return m.support().size() > 1; });
    if (it == ms.end()) {
      PurePowers p(n, 0);
      for (const auto& m : ms) {
        auto s = m.support();
        p[s.front()] = m[s.front()];
      }
      out.push_back(std::move(p));
      continue;
    }
    // m = x_v^e * w with x_v coprime to w
    const std::size_t v = it->support().front();
    Monomial pw = Monomial::variable(n, v, (*it)[v]);
    Monomial w = quotient(*it, pw);
    for (const Monomial& piece : {pw, w}) {
      auto next = ms;
      next.push_back(piece);
      stack.push_back(minimalize_monomials(std::move(next)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<PurePowers> irredundant;
  for (std::size_t a = 0; a < out.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < out.size() && !redundant; ++b)
      if (a != b && pure_contains(out[a], out[b])) redundant = true;
    if (!redundant) irredundant.push_back(out[a]);
  }
  return irredundant;
}

template <CoefficientField F>
Ideal<F> pure_power_ideal(const RingPtr<F>& ring, const PurePowers& p) {
  std::vector<Monomial> ms;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p[v]) ms.push_back(Monomial::variable(p.size(), v, p[v]));
  return monomial_ideal(ring, ms);
}

template <CoefficientField F>
Ideal<F> radical_of(const RingPtr<F>& ring, const PurePowers& p) {
  PurePowers r(p.size(), 0);
  for (std::size_t v = 0; v < p.size(); ++v) r[v] = p[v] ? 1 : 0;
  return pure_power_ideal(ring, r);
}

inline int support_size(const PurePowers& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int e) { return e != 0; }));
}

template <CoefficientField F>
void require_monomial(const Ideal<F>& I) {
  if (!I.is_monomial()) throw std::invalid_argument("ideal has a non-monomial generator");
  if (I.is_unit()) throw std::invalid_argument("the unit ideal has no primary decomposition");
}

/// Drops components containing the intersection of the others.
template <CoefficientField F>
std::vector<PrimaryComponent<F>> prune_redundant(std::vector<PrimaryComponent<F>> cs) {
  for (std::size_t k = 0; k < cs.size() && cs.size() > 1;) {
    std::vector<Ideal<F>> others;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (j != k) others.push_back(cs[j].primary);
    if (intersect(others).is_subset_of(cs[k].primary)) cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(k));
    else ++k;
  }
  return cs;
}

}  // namespace detail

/// Minimal primary decomposition of a monomial ideal: irreducible components
/// merged by radical. Components are listed by decreasing dimension.
template <CoefficientField F>
Decomposition<F> monomial_decomposition(const Ideal<F>& I) {
  detail::require_monomial(I);
  const auto& ring = I.ring();
  const std::size_t n = ring->nvars();
  auto irr = detail::irreducible_components(n, detail::monomials_of(I));
  std::map<std::vector<int>, std::vector<detail::PurePowers>> by_radical;
  for (auto& p : irr) {
    std::vector<int> key;
    for (std::size_t v = 0; v < n; ++v)
      if (p[v]) key.push_back(static_cast<int>(v));
    by_radical[key].push_back(std::move(p));
  }
  std::vector<PrimaryComponent<F>> cs;
  for (auto& [key, group] : by_radical) {
    std::vector<Ideal<F>> qs;
    for (const auto& p : group) qs.push_back(detail::pure_power_ideal(ring, p));
    cs.push_back(PrimaryComponent<F>{intersect(qs), detail::radical_of(ring, group.front()),
                                     static_cast<int>(n) - static_cast<int>(key.size())});
  }
  std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.dim > b.dim; });
  cs = detail::prune_redundant(std::move(cs));
  return Decomposition<F>(I, std::move(cs), Provenance::MonomialComputed);
}

/// Irredundant irreducible decomposition, without merging components that
/// share a radical. Still a primary decomposition, just not a minimal one.
template <CoefficientField F>
Decomposition<F> monomial_irreducible_decomposition(const Ideal<F>& I) {
  detail::require_monomial(I);
  const auto& ring = I.ring();
  const std::size_t n = ring->nvars();
  std::vector<PrimaryComponent<F>> cs;
  for (const auto& p : detail::irreducible_components(n, detail::monomials_of(I)))
    cs.push_back(PrimaryComponent<F>{detail::pure_power_ideal(ring, p), detail::radical_of(ring, p),
                                     static_cast<int>(n) - detail::support_size(p)});
  return Decomposition<F>(I, std::move(cs), Provenance::MonomialComputed);
}

/// Sets T of vertices such that every t in T is a cut point of the graph
/// induced on (V \ T) ∪ {t}. Sorted by size, then lexicographically.
inline std::vector<std::vector<int>> admissible_cut_sets(const Graph& G) {
  const int n = G.vertex_count();
  if (n > 24) throw std::invalid_argument("cut-set enumeration is limited to 24 vertices");
  // A vertex in T must be a cut point somewhere, so it has degree >= 2.
  std::vector<int> candidates;
  for (int v = 1; v <= n; ++v)
    if (G.neighbors(v).size() >= 2) candidates.push_back(v);
  std::vector<std::vector<int>> out{{}};
  const std::size_t m = candidates.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> T;
    for (std::size_t b = 0; b < m; ++b)
      if (mask >> b & 1) T.push_back(candidates[b]);
    const auto c = connected_components(G, T).size();
    bool ok = true;
    for (std::size_t k = 0; k < T.size() && ok; ++k) {
      std::vector<int> smaller = T;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      if (connected_components(G, smaller).size() >= c) ok = false;
    }
    if (ok) out.push_back(std::move(T));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// P_T = (x_t, y_t : t in T) + binomials of the complete graph on each
/// component of G \ T.
template <CoefficientField F>
Ideal<F> cut_set_prime(const Graph& G, const RingPtr<F>& ring, const std::vector<int>& T) {
  require_edge_ring(G, ring);
  const int n = G.vertex_count();
  std::vector<Poly<F>> gens;
  for (int t : T) {
    gens.push_back(Poly<F>::variable(ring, t - 1));
    gens.push_back(Poly<F>::variable(ring, n + t - 1));
  }
  for (const auto& comp : connected_components(G, T))
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b) gens.push_back(edge_binomial(ring, n, comp[a], comp[b]));
  return Ideal<F>(ring, std::move(gens));
}

/// Minimal primes of the binomial edge ideal, one per admissible cut set;
/// the ideal is radical so each component is its own radical.
template <CoefficientField F>
Decomposition<F> binomial_edge_primes(const Graph& G, const RingPtr<F>& ring) {
  require_edge_ring(G, ring);
  const int n = G.vertex_count();
  std::vector<PrimaryComponent<F>> cs;
  for (const auto& T : admissible_cut_sets(G)) {
    auto P = cut_set_prime(G, ring, T);
    const int d = n - static_cast<int>(T.size()) + static_cast<int>(connected_components(G, T).size());
    cs.push_back(PrimaryComponent<F>{P, P, d});
  }
  return Decomposition<F>(binomial_edge_ideal(G, ring), std::move(cs), Provenance::BinomialEdgeComputed);
}

/// A user-supplied component: the primary ideal and optionally its radical.
template <CoefficientField F>
struct ComponentSpec {
  Ideal<F> primary;
  std::optional<Ideal<F>> radical;
};

/// Checks that the components intersect to I and that each lies in its
/// radical, then prunes redundant ones. Primality is not checked.
template <CoefficientField F>
Decomposition<F> load_user_decomposition(const Ideal<F>& I, const std::vector<ComponentSpec<F>>& specs) {
  if (specs.empty()) throw std::invalid_argument("decomposition has no components");
  std::vector<std::string> warnings{"primality of the supplied radicals is not verified"};
  std::vector<PrimaryComponent<F>> cs;
  std::vector<Ideal<F>> qs;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& s = specs[k];
    require_same_ring(s.primary.ring(), I.ring());
    Ideal<F> P = s.radical ? *s.radical : s.primary;
    if (!s.radical)
      warnings.push_back("component " + std::to_string(k + 1) + " has no radical; using the component itself");
    require_same_ring(P.ring(), I.ring());
    if (!s.primary.is_subset_of(P))
      throw std::invalid_argument("component " + std::to_string(k + 1) + " is not contained in its radical");
    if (P.is_unit()) throw std::invalid_argument("component " + std::to_string(k + 1) + " has the unit ideal as radical");
    cs.push_back(PrimaryComponent<F>{s.primary, P, dim(P)});
    qs.push_back(s.primary);
  }
  if (!(intersect(qs) == I)) throw std::invalid_argument("the components do not intersect to the ideal");
  cs = detail::prune_redundant(std::move(cs));
  return Decomposition<F>(I, std::move(cs), Provenance::UserSupplied, std::move(warnings));
}

}  // namespace scmkit
