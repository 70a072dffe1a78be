#pragma once

// Division of module elements by a list of divisors, driven by a heap of
// lazily multiplied summands: the dividend is kept as a sum c_s * u_s * V_s
// and only the current leading term of each summand is materialized.

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "scmkit/terms.hpp"

namespace scmkit {

/// Lead monomials of a divisor list, bucketed by component.
class DivisorIndex {
 public:
  void add(const Monomial& lead, std::uint32_t comp, std::size_t index) {
    if (comp >= buckets_.size()) buckets_.resize(comp + 1);
    buckets_[comp].push_back(Entry{lead, index});
  }

  /// First registered divisor whose lead divides m e_comp.
  std::optional<std::size_t> find(const Monomial& m, std::uint32_t comp) const {
    if (comp >= buckets_.size()) return std::nullopt;
    for (const auto& e : buckets_[comp])
      if (divides(e.lead, m)) return e.index;
    return std::nullopt;
  }

  void clear() { buckets_.clear(); }

 private:
  struct Entry {
    Monomial lead;
    std::size_t index;
  };
  std::vector<std::vector<Entry>> buckets_;
};

template <CoefficientField F>
struct Summand {
  typename F::Element coef;
  Monomial mult;
  const TermVec<F>* vec;
  std::size_t pos = 0;
};

/// Record of one division step: coef * mono * divisor[index] was subtracted.
template <CoefficientField F>
struct Quotient {
  typename F::Element coef;
  Monomial mono;
  std::size_t index;
};

enum class ReduceMode { Full, Top };

/// Reduces sum(summands) by `divisors`. In Top mode reduction stops at the
/// first lead term that no divisor lead divides; in Full mode every term is
/// reduced. Returns the remainder, sorted under `order`.
template <CoefficientField F>
TermVec<F> reduce(const F& field, const ModuleOrder& order, std::vector<Summand<F>> summands,
                  const std::vector<const TermVec<F>*>& divisors, const DivisorIndex& index,
                  ReduceMode mode, std::vector<Quotient<F>>* quotients = nullptr) {
  struct Entry {
    Monomial mono;
    std::uint32_t comp;
    std::uint32_t summand;
  };
  auto less = [&order](const Entry& a, const Entry& b) {
    return order.compare(a.mono, a.comp, b.mono, b.comp) < 0;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);

  auto push_current = [&](std::uint32_t s) {
    const auto& sm = summands[s];
    if (sm.pos < sm.vec->size()) {
      const auto& t = (*sm.vec)[sm.pos];
      heap.push(Entry{sm.mult * t.mono, t.comp, s});
    }
  };
  for (std::uint32_t s = 0; s < summands.size(); ++s) push_current(s);

  TermVec<F> remainder;
  bool reducing = true;
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    typename F::Element acc = field.zero();
    auto take = [&](const Entry& e) {
      auto& sm = summands[e.summand];
      field.add_mul(acc, sm.coef, (*sm.vec)[sm.pos].coef);
      ++sm.pos;
      push_current(e.summand);
    };
    take(top);
    while (!heap.empty() && heap.top().comp == top.comp && heap.top().mono == top.mono) {
      Entry e = heap.top();
      heap.pop();
      take(e);
    }
    if (field.is_zero(acc)) continue;

    if (reducing) {
      if (auto d = index.find(top.mono, top.comp)) {
        const TermVec<F>& g = *divisors[*d];
        auto q = field.div(acc, g.front().coef);
        Monomial u = quotient(top.mono, g.front().mono);
        if (quotients) quotients->push_back(Quotient<F>{q, u, *d});
        if (g.size() > 1) {
          summands.push_back(Summand<F>{field.neg(q), std::move(u), &g, 1});
          push_current(static_cast<std::uint32_t>(summands.size() - 1));
        }
        continue;
      }
      if (mode == ReduceMode::Top) reducing = false;
    }
    remainder.push_back(Term<F>{std::move(acc), std::move(top.mono), top.comp});
  }
  return remainder;
}

/// Convenience: reduce a single element.
template <CoefficientField F>
TermVec<F> reduce(const F& field, const ModuleOrder& order, const TermVec<F>& f,
                  const std::vector<const TermVec<F>*>& divisors, const DivisorIndex& index,
                  ReduceMode mode, std::vector<Quotient<F>>* quotients = nullptr) {
  if (f.empty()) return {};
  std::vector<Summand<F>> s;
  s.push_back(Summand<F>{field.one(), Monomial(f.front().mono.size()), &f, 0});
  return reduce(field, order, std::move(s), divisors, index, mode, quotients);
}

}  // namespace scmkit
