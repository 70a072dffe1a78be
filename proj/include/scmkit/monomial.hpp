#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace scmkit {

using Exponent = std::uint16_t;

/// Exponent vector with cached total degree and a divisibility mask.
///
/// The mask has bit (v mod 64) set whenever x_v occurs, so `a | b` requires
/// `(a.mask() & ~b.mask()) == 0`.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  Monomial(std::initializer_list<int> exps) {
    for (int e : exps) push(e);
  }
  explicit Monomial(std::span<const int> exps) {
    for (int e : exps) push(e);
  }

  static Monomial variable(std::size_t nvars, std::size_t v, int power = 1) {
    Monomial m(nvars);
    m.set(v, power);
    return m;
  }

  std::size_t size() const { return exp_.size(); }
  Exponent operator[](std::size_t v) const { return exp_[v]; }
  int degree() const { return degree_; }
  std::uint64_t mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t v, int e) {
    if (e < 0 || e > 0xFFFF) throw std::out_of_range("exponent out of range");
    degree_ += e - exp_[v];
    exp_[v] = static_cast<Exponent>(e);
    recompute_mask();
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.mask_ == b.mask_ &&
           std::equal(a.exp_.begin(), a.exp_.end(), b.exp_.begin(), b.exp_.end());
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    Monomial r;
    r.exp_.resize(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      unsigned s = unsigned(a.exp_[v]) + b.exp_[v];
      if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
      r.exp_[v] = static_cast<Exponent>(s);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// a | b
  friend bool divides(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & ~b.mask_) != 0 || a.degree_ > b.degree_) return false;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a.exp_[v] > b.exp_[v]) return false;
    return true;
  }

  /// b / a, assuming a | b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    r.exp_.resize(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) {
      assert(b.exp_[v] >= a.exp_[v]);
      r.exp_[v] = static_cast<Exponent>(b.exp_[v] - a.exp_[v]);
    }
    r.degree_ = b.degree_ - a.degree_;
    r.recompute_mask();
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exp_.resize(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      r.exp_[v] = std::max(a.exp_[v], b.exp_[v]);
      r.degree_ += r.exp_[v];
    }
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exp_.resize(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      r.exp_[v] = std::min(a.exp_[v], b.exp_[v]);
      r.degree_ += r.exp_[v];
    }
    r.recompute_mask();
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & b.mask_) == 0) return true;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a.exp_[v] != 0 && b.exp_[v] != 0) return false;
    return true;
  }

  /// Indices of the variables that occur.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < size(); ++v)
      if (exp_[v] != 0) s.push_back(v);
    return s;
  }

  bool is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e <= 1; });
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Exponent e : exp_) h = (h ^ e) * 1099511628211ULL;
    return h;
  }

 private:
  void push(int e) {
    if (e < 0 || e > 0xFFFF) throw std::out_of_range("exponent out of range");
    exp_.push_back(static_cast<Exponent>(e));
    degree_ += e;
    if (e != 0) mask_ |= 1ULL << ((exp_.size() - 1) & 63);
  }
  void recompute_mask() {
    mask_ = 0;
    for (std::size_t v = 0; v < exp_.size(); ++v)
      if (exp_[v] != 0) mask_ |= 1ULL << (v & 63);
  }

  boost::container::small_vector<Exponent, 24> exp_;
  int degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders on exponent vectors. Variables are ordered by declaration:
/// x_0 > x_1 > ... .
class MonomialOrder {
 public:
  enum class Kind { GrevLex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Block order: the first `block` variables are compared first (graded
  /// reverse lexicographic inside the block), then grevlex on the rest.
  /// Any monomial involving a block variable beats every monomial free of it.
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Sign of (a - b): 1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::GrevLex:
        return grevlex_range(a, b, 0, a.size(), a.degree(), b.degree());
      case Kind::Lex:
        for (std::size_t v = 0; v < a.size(); ++v)
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        return 0;
      case Kind::Elimination: {
        int da = 0, db = 0;
        for (std::size_t v = 0; v < block_; ++v) {
          da += a[v];
          db += b[v];
        }
        if (int c = grevlex_range(a, b, 0, block_, da, db)) return c;
        return grevlex_range(a, b, block_, a.size(), a.degree() - da, b.degree() - db);
      }
    }
    return 0;
  }

  /// Sign of (a1*a2 - b1*b2) without forming the products.
  int compare_products(const Monomial& a1, const Monomial& a2, const Monomial& b1,
                       const Monomial& b2) const {
    const std::size_t n = a1.size();
    switch (kind_) {
      case Kind::GrevLex: {
        int da = a1.degree() + a2.degree(), db = b1.degree() + b2.degree();
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t v = n; v-- > 0;) {
          int ea = a1[v] + a2[v], eb = b1[v] + b2[v];
          if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
      }
      case Kind::Lex:
        for (std::size_t v = 0; v < n; ++v) {
          int ea = a1[v] + a2[v], eb = b1[v] + b2[v];
          if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
      case Kind::Elimination:
        return compare(a1 * a2, b1 * b2);
    }
    return 0;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                           int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t v = hi; v-- > lo;)
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace scmkit
