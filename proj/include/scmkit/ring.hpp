#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scmkit/field.hpp"
#include "scmkit/monomial.hpp"

namespace scmkit {

/// Standard graded polynomial ring K[x_0..x_{n-1}]; every variable has degree 1.
template <CoefficientField F>
class PolyRing {
 public:
  using Field = F;

  PolyRing(F field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), names_(std::move(names)), order_(order) {
    if (names_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const MonomialOrder& order() const { return order_; }

  std::ptrdiff_t index_of(const std::string& name) const {
    for (std::size_t v = 0; v < names_.size(); ++v)
      if (names_[v] == name) return static_cast<std::ptrdiff_t>(v);
    return -1;
  }

  Monomial one_monomial() const { return Monomial(nvars()); }

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> names,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(names), order);
}

/// Same ring object or structurally equal rings.
template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <CoefficientField F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace scmkit
