#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>

#include "scmkit/ring.hpp"
#include "scmkit/terms.hpp"

namespace scmkit {

template <CoefficientField F>
std::string format_monomial(const PolyRing<F>& ring, const Monomial& m) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(v);
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

/// Text for one polynomial (the terms of one component of a module element).
template <CoefficientField F>
std::string format_terms(const PolyRing<F>& ring, const TermVec<F>& ts) {
  if (ts.empty()) return "0";
  const F& k = ring.field();
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string c = k.to_string(ts[i].coef);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    if (ts[i].mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += format_monomial(ring, ts[i].mono);
    }
  }
  return s;
}

/// Exact multivariate polynomial: terms strictly descending in the ring's
/// order, no zero coefficients.
template <CoefficientField F>
class Poly {
 public:
  using Element = typename F::Element;

  explicit Poly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Takes arbitrary terms (any order, duplicates, zeros) and normalizes.
  Poly(RingPtr<F> ring, TermVec<F> ts) : ring_(std::move(ring)), terms_(std::move(ts)) {
    for (auto& t : terms_) {
      if (t.mono.size() != ring_->nvars()) throw std::invalid_argument("monomial has wrong length");
      t.comp = 0;
    }
    terms::normalize(ring_->field(), order(), terms_);
  }

  static Poly constant(RingPtr<F> ring, const Element& c) {
    TermVec<F> ts;
    ts.push_back(Term<F>{c, ring->one_monomial(), 0});
    return Poly(ring, std::move(ts));
  }
  template <std::integral I>
    requires(!std::same_as<I, Element>)
  static Poly constant(RingPtr<F> ring, I c) {
    return constant(ring, ring->field().from_int(static_cast<long>(c)));
  }
  static Poly variable(RingPtr<F> ring, std::size_t v) {
    if (v >= ring->nvars()) throw std::out_of_range("variable index out of range");
    TermVec<F> ts;
    ts.push_back(Term<F>{ring->field().one(), Monomial::variable(ring->nvars(), v), 0});
    return Poly(ring, std::move(ts));
  }
  static Poly monomial(RingPtr<F> ring, const Element& c, Monomial m) {
    TermVec<F> ts;
    ts.push_back(Term<F>{c, std::move(m), 0});
    return Poly(ring, std::move(ts));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const TermVec<F>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return size() == 1; }

  std::pair<Element, Monomial> lead_term() const {
    if (is_zero()) throw std::domain_error("lead term of the zero polynomial");
    return {terms_.front().coef, terms_.front().mono};
  }
  const Monomial& lead_monomial() const {
    if (is_zero()) throw std::domain_error("lead monomial of the zero polynomial");
    return terms_.front().mono;
  }
  const Element& lead_coefficient() const {
    if (is_zero()) throw std::domain_error("lead coefficient of the zero polynomial");
    return terms_.front().coef;
  }

  /// Largest total degree of a term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = field().neg(t.coef);
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    return Poly(a.ring_, terms::add(a.field(), a.order(), a.terms_, b.terms_), sorted_tag{});
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    if (b.is_zero()) return a;
    return Poly(a.ring_,
                terms::add_scaled(a.field(), a.order(), a.terms_, a.field().neg(a.field().one()),
                                  a.ring_->one_monomial(), b.terms_),
                sorted_tag{});
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    TermVec<F> out;
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    for (const auto& t : small.terms_)
      out = terms::add_scaled(a.field(), a.order(), out, t.coef, t.mono, big.terms_);
    return Poly(a.ring_, std::move(out), sorted_tag{});
  }
  Poly scaled(const Element& c) const {
    Poly r = *this;
    terms::scale(field(), r.terms_, c);
    return r;
  }
  Poly pow(unsigned e) const {
    Poly r = constant(ring_, 1);
    Poly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return same_ring(a.ring_, b.ring_) && terms::equal(a.field(), a.terms_, b.terms_);
  }

  std::string to_string() const { return format_terms(*ring_, terms_); }

  ModuleOrder order() const { return ModuleOrder::top(ring_->order()); }
  const F& field() const { return ring_->field(); }

 private:
  struct sorted_tag {};
  Poly(RingPtr<F> ring, TermVec<F> ts, sorted_tag) : ring_(std::move(ring)), terms_(std::move(ts)) {}

  RingPtr<F> ring_;
  TermVec<F> terms_;
};

/// Lead term of f under the ring order.
template <CoefficientField F>
std::pair<typename F::Element, Monomial> leading_term(const Poly<F>& f) {
  return f.lead_term();
}

inline int monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials of different lengths");
  return order.compare(a, b);
}

}  // namespace scmkit
