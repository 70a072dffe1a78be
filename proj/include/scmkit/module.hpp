#pragma once

// Graded free modules, their elements, and graded matrices.
//
// Grading convention: a free module F = (+)_i S(-a_i) is described by the
// generator degrees a_i ("degrees" below). An element sum_i f_i e_i is
// homogeneous of degree d when deg f_i + a_i = d for every nonzero f_i.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scmkit/poly.hpp"

namespace scmkit {

struct FreeModule {
  std::vector<int> degrees;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> d) : degrees(std::move(d)) {}
  static FreeModule free(std::size_t rank, int degree = 0) {
    return FreeModule(std::vector<int>(rank, degree));
  }

  std::size_t rank() const { return degrees.size(); }
  bool operator==(const FreeModule&) const = default;
};

/// Graded degree of a homogeneous term list; nullopt for zero or inhomogeneous.
template <CoefficientField F>
std::optional<int> homogeneous_degree(const TermVec<F>& v, const FreeModule& ambient) {
  if (v.empty()) return std::nullopt;
  int d = v.front().mono.degree() + ambient.degrees.at(v.front().comp);
  for (const auto& t : v)
    if (t.mono.degree() + ambient.degrees.at(t.comp) != d) return std::nullopt;
  return d;
}

template <CoefficientField F>
bool is_homogeneous(const TermVec<F>& v, const FreeModule& ambient) {
  return v.empty() || homogeneous_degree<F>(v, ambient).has_value();
}

/// Element of a graded free module, terms sorted term-over-position.
template <CoefficientField F>
class Vec {
 public:
  Vec(RingPtr<F> ring, FreeModule ambient) : ring_(std::move(ring)), ambient_(std::move(ambient)) {}

  Vec(RingPtr<F> ring, FreeModule ambient, TermVec<F> ts)
      : ring_(std::move(ring)), ambient_(std::move(ambient)), terms_(std::move(ts)) {
    for (const auto& t : terms_)
      if (t.comp >= ambient_.rank()) throw std::out_of_range("component outside the ambient module");
    terms::normalize(ring_->field(), order(), terms_);
  }

  static Vec from_components(RingPtr<F> ring, FreeModule ambient, const std::vector<Poly<F>>& comps) {
    if (comps.size() != ambient.rank()) throw std::invalid_argument("component count differs from rank");
    TermVec<F> ts;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      require_same_ring(ring, comps[i].ring());
      for (auto t : comps[i].terms()) {
        t.comp = static_cast<std::uint32_t>(i);
        ts.push_back(std::move(t));
      }
    }
    return Vec(std::move(ring), std::move(ambient), std::move(ts));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  const TermVec<F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const { return homogeneous_degree<F>(terms_, ambient_); }
  bool is_homogeneous() const { return scmkit::is_homogeneous<F>(terms_, ambient_); }

  Poly<F> component(std::size_t i) const {
    TermVec<F> ts;
    for (const auto& t : terms_)
      if (t.comp == i) ts.push_back(Term<F>{t.coef, t.mono, 0});
    return Poly<F>(ring_, std::move(ts));
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    a.check(b);
    return Vec(a.ring_, a.ambient_, terms::add(a.field(), a.order(), a.terms_, b.terms_), 0);
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    a.check(b);
    return Vec(a.ring_, a.ambient_,
               terms::add_scaled(a.field(), a.order(), a.terms_, a.field().neg(a.field().one()),
                                 a.ring_->one_monomial(), b.terms_),
               0);
  }
  friend Vec operator*(const Poly<F>& p, const Vec& v) {
    require_same_ring(p.ring(), v.ring_);
    return Vec(v.ring_, v.ambient_, terms::mul_poly(v.field(), v.order(), p.terms(), v.terms_), 0);
  }
  friend bool operator==(const Vec& a, const Vec& b) {
    return same_ring(a.ring_, b.ring_) && a.ambient_ == b.ambient_ &&
           terms::equal(a.field(), a.terms_, b.terms_);
  }

  ModuleOrder order() const { return ModuleOrder::top(ring_->order()); }
  const F& field() const { return ring_->field(); }

 private:
  Vec(RingPtr<F> ring, FreeModule ambient, TermVec<F> ts, int)
      : ring_(std::move(ring)), ambient_(std::move(ambient)), terms_(std::move(ts)) {}
  void check(const Vec& b) const {
    require_same_ring(ring_, b.ring_);
    if (!(ambient_ == b.ambient_)) throw std::invalid_argument("ambient module mismatch");
  }

  RingPtr<F> ring_;
  FreeModule ambient_;
  TermVec<F> terms_;
};

/// A graded map F_source -> F_target stored by columns (each column a term
/// list in the target, sorted term-over-position).
template <CoefficientField F>
class Matrix {
 public:
  Matrix(RingPtr<F> ring, FreeModule target) : ring_(std::move(ring)), target_(std::move(target)) {}

  /// Columns are normalized; a column's degree is inferred unless given.
  /// Zero columns without a given degree get degree 0.
  Matrix(RingPtr<F> ring, FreeModule target, std::vector<TermVec<F>> cols,
         std::optional<std::vector<int>> source_degrees = std::nullopt)
      : ring_(std::move(ring)), target_(std::move(target)), cols_(std::move(cols)) {
    const ModuleOrder ord = order();
    for (auto& c : cols_) {
      for (const auto& t : c)
        if (t.comp >= target_.rank()) throw std::out_of_range("matrix entry outside the target");
      if (!terms::is_sorted<F>(ord, c)) terms::normalize(field(), ord, c);
    }
    if (source_degrees) {
      if (source_degrees->size() != cols_.size())
        throw std::invalid_argument("source degree count differs from column count");
      source_ = FreeModule(std::move(*source_degrees));
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        auto d = homogeneous_degree<F>(cols_[j], target_);
        if (!cols_[j].empty() && (!d || *d != source_.degrees[j]))
          throw std::invalid_argument("column " + std::to_string(j) + " is not homogeneous of its degree");
      }
    } else {
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].empty()) {
          source_.degrees.push_back(0);
          continue;
        }
        auto d = homogeneous_degree<F>(cols_[j], target_);
        if (!d) throw std::invalid_argument("column " + std::to_string(j) + " is not homogeneous");
        source_.degrees.push_back(*d);
      }
    }
  }

  /// Rows of polynomials; target degrees default to 0.
  static Matrix from_rows(RingPtr<F> ring, const std::vector<std::vector<Poly<F>>>& rows,
                          std::optional<std::vector<int>> target_degrees = std::nullopt) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    const std::size_t ncols = rows.front().size();
    for (const auto& r : rows)
      if (r.size() != ncols) throw std::invalid_argument("ragged matrix rows");
    FreeModule target = target_degrees ? FreeModule(*target_degrees) : FreeModule::free(rows.size());
    if (target.rank() != rows.size()) throw std::invalid_argument("target degree count differs from row count");
    std::vector<TermVec<F>> cols(ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < ncols; ++c) {
        require_same_ring(ring, rows[r][c].ring());
        for (auto t : rows[r][c].terms()) {
          t.comp = static_cast<std::uint32_t>(r);
          cols[c].push_back(std::move(t));
        }
      }
    return Matrix(std::move(ring), std::move(target), std::move(cols));
  }

  static Matrix identity(RingPtr<F> ring, const FreeModule& m) {
    std::vector<TermVec<F>> cols(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i)
      cols[i].push_back(Term<F>{ring->field().one(), ring->one_monomial(), static_cast<std::uint32_t>(i)});
    return Matrix(ring, m, std::move(cols), m.degrees);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const FreeModule& target() const { return target_; }
  const FreeModule& source() const { return source_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return cols_.size(); }
  const std::vector<TermVec<F>>& columns() const { return cols_; }
  const TermVec<F>& column(std::size_t j) const { return cols_.at(j); }

  Poly<F> entry(std::size_t r, std::size_t c) const {
    TermVec<F> ts;
    for (const auto& t : cols_.at(c))
      if (t.comp == r) ts.push_back(Term<F>{t.coef, t.mono, 0});
    return Poly<F>(ring_, std::move(ts));
  }

  bool is_zero() const {
    for (const auto& c : cols_)
      if (!c.empty()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows() != cols() || !(target_ == source_)) return false;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const auto& c = cols_[j];
      if (c.size() != 1 || c[0].comp != j || !c[0].mono.is_one() || !field().is_one(c[0].coef))
        return false;
    }
    return true;
  }

  /// Hom(-, S(-shift)) applied to the map: the transpose, with generator
  /// degrees a -> shift - a.
  Matrix dual(int shift = 0) const {
    FreeModule new_target, new_source;
    for (int a : source_.degrees) new_target.degrees.push_back(shift - a);
    for (int a : target_.degrees) new_source.degrees.push_back(shift - a);
    std::vector<TermVec<F>> new_cols(rows());
    for (std::size_t j = 0; j < cols_.size(); ++j)
      for (const auto& t : cols_[j])
        new_cols[t.comp].push_back(Term<F>{t.coef, t.mono, static_cast<std::uint32_t>(j)});
    return Matrix(ring_, std::move(new_target), std::move(new_cols), std::move(new_source.degrees));
  }

  Matrix transpose() const { return dual(0); }

  /// this * other
  Matrix operator*(const Matrix& other) const {
    require_same_ring(ring_, other.ring_);
    if (other.rows() != cols()) throw std::invalid_argument("matrix size mismatch in product");
    const ModuleOrder ord = order();
    std::vector<TermVec<F>> out(other.cols());
    for (std::size_t j = 0; j < other.cols(); ++j)
      for (const auto& t : other.cols_[j])
        out[j] = terms::add_scaled(field(), ord, out[j], t.coef, t.mono, cols_[t.comp]);
    std::vector<int> degs = other.source_.degrees;
    return Matrix(ring_, target_, std::move(out), std::move(degs));
  }

  /// Columns [this | other] over the same target.
  Matrix concat(const Matrix& other) const {
    if (!(target_ == other.target_)) throw std::invalid_argument("target mismatch in concat");
    auto cols = cols_;
    cols.insert(cols.end(), other.cols_.begin(), other.cols_.end());
    auto degs = source_.degrees;
    degs.insert(degs.end(), other.source_.degrees.begin(), other.source_.degrees.end());
    return Matrix(ring_, target_, std::move(cols), std::move(degs));
  }

  Matrix without_zero_columns() const {
    std::vector<TermVec<F>> cols;
    std::vector<int> degs;
    for (std::size_t j = 0; j < cols_.size(); ++j)
      if (!cols_[j].empty()) {
        cols.push_back(cols_[j]);
        degs.push_back(source_.degrees[j]);
      }
    return Matrix(ring_, target_, std::move(cols), std::move(degs));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!same_ring(a.ring_, b.ring_) || !(a.target_ == b.target_) || !(a.source_ == b.source_))
      return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!terms::equal(a.field(), a.cols_[j], b.cols_[j])) return false;
    return true;
  }

  /// One line per row: `| e11 e12 ... |`.
  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
      s += "|";
      for (std::size_t c = 0; c < cols(); ++c) s += " " + entry(r, c).to_string();
      s += " |";
      if (r + 1 < rows()) s += "\n";
    }
    return s;
  }

  ModuleOrder order() const { return ModuleOrder::top(ring_->order()); }
  const F& field() const { return ring_->field(); }

 private:
  RingPtr<F> ring_;
  FreeModule target_;
  FreeModule source_;
  std::vector<TermVec<F>> cols_;
};

}  // namespace scmkit
