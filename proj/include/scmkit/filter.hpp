#pragma once

// Filter ideals I^{<i>} (intersection of the primary components of dimension
// greater than i), unmixed layers, and the depth criterion for S/I being
// sequentially Cohen-Macaulay.

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "scmkit/decomposition.hpp"
#include "scmkit/resolution.hpp"

namespace scmkit {

/// One row of the depth criterion: depth S/I^{<i>} >= i + 1.
struct DepthCheck {
  int index;
  int depth;  // kInfinity when I^{<i>} is the unit ideal
  bool passed;
};

struct ScmIdealReport {
  bool scm = true;
  int dim = 0;
  std::vector<DepthCheck> checks;
};

/// Filter ideals of one decomposition, computed on demand and cached by the
/// set of selected components.
template <CoefficientField F>
class FilterProfile {
 public:
  explicit FilterProfile(Decomposition<F> D) : D_(std::move(D)) {
    if (D_.target().is_unit()) throw std::invalid_argument("the unit ideal is not a valid target");
    d_ = kMinusInfinity;
    for (const auto& c : D_.components()) d_ = std::max(d_, c.dim);
  }

  const Ideal<F>& target() const { return D_.target(); }
  const Decomposition<F>& decomposition() const { return D_; }
  int dim() const { return d_; }

  /// I^{<i>} for -1 <= i <= dim S/I.
  Ideal<F> filter_ideal(int i) const {
    if (i < -1 || i > d_)
      throw std::out_of_range("filter index " + std::to_string(i) + " outside -1.." + std::to_string(d_));
    return ideal_for(selection(i));
  }

  /// Least i with I^{<i>} != I.
  int minimum_dimension() const {
    for (int i = -1; i <= d_; ++i)
      if (!(filter_ideal(i) == target())) return i;
    return d_;
  }

  /// U_i = I^{<i>} / I^{<i-1>} for 1 <= i <= dim S/I, as a raw subquotient of S^1.
  ModulePresentation<F> unmixed_layer(int i) const {
    if (i < 1 || i > d_) throw std::out_of_range("unmixed layer index " + std::to_string(i) + " outside 1.." + std::to_string(d_));
    auto row = [&](const Ideal<F>& J) {
      std::vector<TermVec<F>> cols;
      for (const auto& g : J.gens()) cols.push_back(g.terms());
      return Matrix<F>(target().ring(), FreeModule::free(1), std::move(cols));
    };
    return ModulePresentation<F>::subquotient(row(filter_ideal(i)), row(filter_ideal(i - 1)));
  }

  bool layer_is_zero(int i) const {
    if (i < 1 || i > d_) throw std::out_of_range("unmixed layer index " + std::to_string(i) + " outside 1.." + std::to_string(d_));
    return selection(i) == selection(i - 1) || filter_ideal(i) == filter_ideal(i - 1);
  }

  /// U_i = 0 for 1 <= i < d and U_d = S/I, i.e. I^{<d-1>} = I.
  bool is_unmixed() const {
    for (int i = 1; i < d_; ++i)
      if (!layer_is_zero(i)) return false;
    return d_ < 0 || filter_ideal(d_ - 1) == target();
  }

  /// depth S/I^{<i>} >= i + 1 for 0 <= i < d. Quotients by the unit ideal
  /// pass. Each distinct filter ideal is resolved once; `threads` > 1 runs
  /// the resolutions concurrently and then reports every index.
  ScmIdealReport scm_report(unsigned threads = 1, bool exhaustive = false) const {
    ScmIdealReport rep;
    rep.dim = d_;
    std::vector<std::vector<bool>> distinct;
    std::vector<std::size_t> slot_of;  // per index i
    for (int i = 0; i < d_; ++i) {
      auto sel = selection(i);
      auto it = std::find(distinct.begin(), distinct.end(), sel);
      slot_of.push_back(static_cast<std::size_t>(it - distinct.begin()));
      if (it == distinct.end()) distinct.push_back(std::move(sel));
    }
    std::vector<std::optional<int>> depths(distinct.size());
    auto compute = [&](std::size_t s) {
      if (std::none_of(distinct[s].begin(), distinct[s].end(), [](bool b) { return b; })) return kInfinity;
      return depth(ideal_for(distinct[s]));
    };

    if (threads > 1 && distinct.size() > 1) {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::mutex m;
      std::exception_ptr err;
      auto worker = [&]() {
        for (std::size_t s = next++; s < distinct.size(); s = next++) {
          try {
            int v = compute(s);
            std::lock_guard<std::mutex> lock(m);
            depths[s] = v;
          } catch (...) {
            std::lock_guard<std::mutex> lock(m);
            if (!err) err = std::current_exception();
          }
        }
      };
      const std::size_t nthreads = std::min<std::size_t>(threads, distinct.size());
      for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      if (err) std::rethrow_exception(err);
      exhaustive = true;
    }

    for (int i = 0; i < d_; ++i) {
      auto& v = depths[slot_of[i]];
      if (!v) v = compute(slot_of[i]);
      bool ok = *v == kInfinity || *v >= i + 1;
      rep.checks.push_back(DepthCheck{i, *v, ok});
      if (!ok) {
        rep.scm = false;
        if (!exhaustive) break;
      }
    }
    return rep;
  }

 private:
  std::vector<bool> selection(int i) const {
    std::vector<bool> sel;
    for (const auto& c : D_.components()) sel.push_back(c.dim > i);
    return sel;
  }

  Ideal<F> ideal_for(const std::vector<bool>& sel) const {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(sel); it != cache_.end()) return it->second;
    Ideal<F> J = compute(sel);
    cache_.emplace(sel, J);
    return J;
  }

  Ideal<F> compute(const std::vector<bool>& sel) const {
    std::vector<Ideal<F>> qs;
    for (std::size_t k = 0; k < sel.size(); ++k)
      if (sel[k]) qs.push_back(D_.components()[k].primary);
    if (qs.empty()) return Ideal<F>::unit(target().ring());
    if (qs.size() == sel.size()) return target();
    return intersect(qs);
  }

  Decomposition<F> D_;
  int d_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<bool>, Ideal<F>> cache_;
};

template <CoefficientField F>
void require_decomposition_of(const Ideal<F>& I, const Decomposition<F>& D) {
  require_same_ring(I.ring(), D.target().ring());
  if (!(I == D.target())) throw std::invalid_argument("decomposition belongs to a different ideal");
}

template <CoefficientField F>
Ideal<F> filter_ideal(const Ideal<F>& I, int i, const Decomposition<F>& D) {
  require_decomposition_of(I, D);
  return FilterProfile<F>(D).filter_ideal(i);
}

template <CoefficientField F>
int minimum_dimension(const Ideal<F>& I, const Decomposition<F>& D) {
  require_decomposition_of(I, D);
  return FilterProfile<F>(D).minimum_dimension();
}

template <CoefficientField F>
ModulePresentation<F> unmixed_layer(const Ideal<F>& I, int i, const Decomposition<F>& D) {
  require_decomposition_of(I, D);
  return FilterProfile<F>(D).unmixed_layer(i);
}

template <CoefficientField F>
bool is_unmixed(const Ideal<F>& I, const Decomposition<F>& D) {
  require_decomposition_of(I, D);
  return FilterProfile<F>(D).is_unmixed();
}

/// Thread count from SCMKIT_THREADS, default 1.
inline unsigned configured_threads() {
  if (const char* s = std::getenv("SCMKIT_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

template <CoefficientField F>
bool is_scm_ideal(const Ideal<F>& I, const Decomposition<F>& D) {
  require_decomposition_of(I, D);
  return FilterProfile<F>(D).scm_report(configured_threads()).scm;
}

}  // namespace scmkit
