#pragma once

// Exact coefficient fields.
//
// A field is a small context object; its elements are plain values and all
// arithmetic goes through the context (this is what lets PrimeField carry a
// runtime modulus without storing it in every coefficient).

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace scmkit {

template <class F>
concept CoefficientField = requires(const F& f, typename F::Element& acc,
                                    const typename F::Element& a, const typename F::Element& b,
                                    long n) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.is_one(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.add(a, b) } -> std::same_as<typename F::Element>;
  { f.sub(a, b) } -> std::same_as<typename F::Element>;
  { f.mul(a, b) } -> std::same_as<typename F::Element>;
  { f.div(a, b) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  f.add_mul(acc, a, b);
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
};

/// The rational numbers. Elements are GMP rationals, always canonical
/// (lowest terms, positive denominator).
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_integer(const mpz_class& v) const { return Element(v); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const {
    if (is_zero(b)) throw std::domain_error("division by zero in QQ");
    return a / b;
  }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return div(one(), a); }

  /// acc += a * b
  void add_mul(Element& acc, const Element& a, const Element& b) const {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
  }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  std::uint64_t characteristic() const { return 0; }

  bool operator==(const Rationals&) const = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Z/p for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (1ULL << 31)) throw std::invalid_argument("ZZ/p: modulus must be below 2^31");
    if (!is_prime(p)) throw std::invalid_argument("ZZ/p: " + std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero in ZZ/" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return static_cast<Element>(t < 0 ? t + p_ : t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  void add_mul(Element& acc, Element a, Element b) const { acc = add(acc, mul(a, b)); }

  /// Symmetric representative in (-p/2, p/2].
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  std::string name() const { return "ZZ/" + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

static_assert(CoefficientField<Rationals>);
static_assert(CoefficientField<PrimeField>);

}  // namespace scmkit
