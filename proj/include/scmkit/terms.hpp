#pragma once

// Sparse term lists shared by polynomials and free-module elements, and the
// module monomial orders they are sorted by.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "scmkit/field.hpp"
#include "scmkit/monomial.hpp"

namespace scmkit {

template <CoefficientField F>
struct Term {
  typename F::Element coef;
  Monomial mono;
  std::uint32_t comp = 0;
};

template <CoefficientField F>
using TermVec = std::vector<Term<F>>;

/// Data for the order induced by a map: basis element i is compared through
/// `totals[i]` (the monomial of its image's lead, pushed down to the bottom
/// free module) and `base[i]` (the bottom component that lead lands in).
struct SchreyerData {
  std::vector<Monomial> totals;
  std::vector<std::uint32_t> base;
};

/// Monomial orders on free modules. Ties between equal monomials in
/// different positions go to the lower position (e_0 > e_1 > ...).
class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm, BlockTermOverPosition, Schreyer };

  static ModuleOrder top(MonomialOrder m) { return ModuleOrder(Kind::TermOverPosition, m); }
  static ModuleOrder pot(MonomialOrder m) { return ModuleOrder(Kind::PositionOverTerm, m); }
  /// Positions below `split` dominate positions at or above it; term over
  /// position inside each block.
  static ModuleOrder block_top(MonomialOrder m, std::uint32_t split) {
    ModuleOrder o(Kind::BlockTermOverPosition, m);
    o.split_ = split;
    return o;
  }
  static ModuleOrder schreyer(MonomialOrder m, std::shared_ptr<const SchreyerData> data) {
    ModuleOrder o(Kind::Schreyer, m);
    o.schreyer_ = std::move(data);
    return o;
  }

  Kind kind() const { return kind_; }
  const MonomialOrder& monomial_order() const { return mono_; }
  std::uint32_t split() const { return split_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    switch (kind_) {
      case Kind::TermOverPosition:
        if (int c = mono_.compare(a, b)) return c;
        return position(ca, cb);
      case Kind::PositionOverTerm:
        if (int c = position(ca, cb)) return c;
        return mono_.compare(a, b);
      case Kind::BlockTermOverPosition: {
        bool ba = ca < split_, bb = cb < split_;
        if (ba != bb) return ba ? 1 : -1;
        if (int c = mono_.compare(a, b)) return c;
        return position(ca, cb);
      }
      case Kind::Schreyer: {
        const auto& s = *schreyer_;
        if (int c = mono_.compare_products(a, s.totals[ca], b, s.totals[cb])) return c;
        if (int c = position(s.base[ca], s.base[cb])) return c;
        return position(ca, cb);
      }
    }
    return 0;
  }

  template <CoefficientField F>
  int compare(const Term<F>& a, const Term<F>& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

 private:
  ModuleOrder(Kind k, MonomialOrder m) : kind_(k), mono_(m) {}
  static int position(std::uint32_t ca, std::uint32_t cb) {
    if (ca == cb) return 0;
    return ca < cb ? 1 : -1;
  }

  Kind kind_;
  MonomialOrder mono_;
  std::uint32_t split_ = 0;
  std::shared_ptr<const SchreyerData> schreyer_;
};

namespace terms {

/// Sort descending, merge equal terms, drop zeros.
template <CoefficientField F>
void normalize(const F& field, const ModuleOrder& order, TermVec<F>& v) {
  std::sort(v.begin(), v.end(),
            [&](const Term<F>& a, const Term<F>& b) { return order.compare(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Term<F> t = std::move(v[i]);
    std::size_t j = i + 1;
    while (j < v.size() && v[j].comp == t.comp && v[j].mono == t.mono) {
      t.coef = field.add(t.coef, v[j].coef);
      ++j;
    }
    if (!field.is_zero(t.coef)) v[out++] = std::move(t);
    i = j;
  }
  v.resize(out);
}

template <CoefficientField F>
bool is_sorted(const ModuleOrder& order, const TermVec<F>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (order.compare(v[i - 1], v[i]) <= 0) return false;
  return true;
}

/// a + c * m * b, merging two sorted lists.
template <CoefficientField F>
TermVec<F> add_scaled(const F& field, const ModuleOrder& order, const TermVec<F>& a,
                      const typename F::Element& c, const Monomial& m, const TermVec<F>& b) {
  TermVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term<F> tb;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      tb.coef = field.mul(c, b[j].coef);
      tb.mono = m * b[j].mono;
      tb.comp = b[j].comp;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() || have_b) {
    int cmp;
    if (i >= a.size()) cmp = -1;
    else if (!have_b) cmp = 1;
    else cmp = order.compare(a[i].mono, a[i].comp, tb.mono, tb.comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      ++j;
      load_b();
    } else {
      auto s = field.add(a[i].coef, tb.coef);
      if (!field.is_zero(s)) out.push_back(Term<F>{std::move(s), a[i].mono, a[i].comp});
      ++i;
      ++j;
      load_b();
    }
  }
  return out;
}

template <CoefficientField F>
TermVec<F> add(const F& field, const ModuleOrder& order, const TermVec<F>& a, const TermVec<F>& b) {
  if (b.empty()) return a;
  return add_scaled(field, order, a, field.one(), Monomial(b.front().mono.size()), b);
}

template <CoefficientField F>
void scale(const F& field, TermVec<F>& v, const typename F::Element& c) {
  if (field.is_zero(c)) {
    v.clear();
    return;
  }
  for (auto& t : v) t.coef = field.mul(t.coef, c);
}

template <CoefficientField F>
void make_monic(const F& field, TermVec<F>& v) {
  if (v.empty() || field.is_one(v.front().coef)) return;
  scale(field, v, field.inv(v.front().coef));
}

/// c * m * v (order preserved since orders are multiplicative).
template <CoefficientField F>
TermVec<F> mul_term(const F& field, const TermVec<F>& v, const typename F::Element& c,
                    const Monomial& m) {
  TermVec<F> out;
  if (field.is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(Term<F>{field.mul(c, t.coef), m * t.mono, t.comp});
  return out;
}

/// Polynomial (terms in comp 0) times module element.
template <CoefficientField F>
TermVec<F> mul_poly(const F& field, const ModuleOrder& order, const TermVec<F>& poly,
                    const TermVec<F>& v) {
  TermVec<F> out;
  for (const auto& t : poly) out = add_scaled(field, order, out, t.coef, t.mono, v);
  return out;
}

template <CoefficientField F>
bool equal(const F& field, const TermVec<F>& a, const TermVec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].comp != b[i].comp || !(a[i].mono == b[i].mono) || !field.equal(a[i].coef, b[i].coef))
      return false;
  return true;
}

}  // namespace terms
}  // namespace scmkit
