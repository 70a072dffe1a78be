#pragma once

// Sparse exact linear algebra over a coefficient field: incremental row
// echelon form, used for ranks of constant parts of resolution maps.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "scmkit/field.hpp"

namespace scmkit {

template <CoefficientField F>
using SparseVector = std::vector<std::pair<std::uint32_t, typename F::Element>>;  // sorted by index

/// Vectors are inserted one at a time; each is reduced against the pivots
/// found so far and becomes a new pivot if anything survives.
template <CoefficientField F>
class EchelonForm {
 public:
  explicit EchelonForm(const F& field) : field_(field) {}

  /// Returns true when v was independent of the vectors inserted before.
  bool insert(SparseVector<F> v) {
    normalize(v);
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        auto inv = field_.inv(v.front().second);
        for (auto& e : v) e.second = field_.mul(e.second, inv);
        const std::uint32_t key = v.front().first;
        pivots_.emplace(key, std::move(v));
        return true;
      }
      v = axpy(v, field_.neg(v.front().second), it->second);
    }
    return false;
  }

  /// Whether v lies in the span of the inserted vectors.
  bool in_span(SparseVector<F> v) const {
    normalize(v);
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) return false;
      v = axpy(v, field_.neg(v.front().second), it->second);
    }
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void normalize(SparseVector<F>& v) const {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector<F> out;
    for (auto& e : v) {
      if (!out.empty() && out.back().first == e.first) out.back().second = field_.add(out.back().second, e.second);
      else out.push_back(std::move(e));
      if (field_.is_zero(out.back().second)) out.pop_back();
    }
    v = std::move(out);
  }

  // a + c * b
  SparseVector<F> axpy(const SparseVector<F>& a, const typename F::Element& c, const SparseVector<F>& b) const {
    SparseVector<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i >= a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, field_.mul(c, b[j].second));
        ++j;
      } else {
        auto s = a[i].second;
        field_.add_mul(s, c, b[j].second);
        if (!field_.is_zero(s)) out.emplace_back(a[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  F field_;
  std::map<std::uint32_t, SparseVector<F>> pivots_;
};

template <CoefficientField F>
std::size_t rank(const F& field, std::vector<SparseVector<F>> vectors) {
  EchelonForm<F> e(field);
  for (auto& v : vectors) e.insert(std::move(v));
  return e.rank();
}

}  // namespace scmkit
