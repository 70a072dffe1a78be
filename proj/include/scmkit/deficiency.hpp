#pragma once

// Modules of deficiency w^i(M) = Ext^{n-i}(M, S(-n)) and the checks built on
// them: Cohen-Macaulay, canonically Cohen-Macaulay, sequentially
// Cohen-Macaulay.

#include <optional>
#include <stdexcept>
#include <vector>

#include "scmkit/resolution.hpp"

namespace scmkit {

template <CoefficientField F>
struct DeficiencyResult {
  int index = 0;
  ModulePresentation<F> module;
  ModuleInvariants invariants;  // of `module`
};

/// Resolves M once and serves every w^i from the dualized resolution.
template <CoefficientField F>
class DeficiencyModules {
 public:
  explicit DeficiencyModules(const ModulePresentation<F>& M)
      : ring_(M.ring()), resolution_(minimal_free_resolution(M)) {
    const int n = static_cast<int>(ring_->nvars());
    for (const auto& d : resolution_.maps) duals_.push_back(d.dual(n));
  }

  const FreeResolution<F>& resolution() const { return resolution_; }

  /// w^i as a minimal cokernel presentation. Zero outside 0 <= n - i <= pd.
  ModulePresentation<F> module(int i) const {
    const int n = static_cast<int>(ring_->nvars());
    const int j = n - i;
    const int p = static_cast<int>(resolution_.modules.size()) - 1;
    if (j < 0 || j > p || resolution_.modules[j].rank() == 0)
      return ModulePresentation<F>::free(ring_, FreeModule{});

    // Hom(F_j, S(-n)) and the maps in and out of it.
    FreeModule fj;
    for (int a : resolution_.modules[j].degrees) fj.degrees.push_back(n - a);
    Matrix<F> kernel = j < p ? syzygy_module(duals_[j]) : Matrix<F>::identity(ring_, fj);
    Matrix<F> image = j > 0 ? duals_[j - 1] : Matrix<F>(ring_, fj, {});
    auto homology = ModulePresentation<F>::subquotient(kernel, image);
    if (kernel.cols() == 0) return ModulePresentation<F>::free(ring_, FreeModule{});
    Matrix<F> P = prune(present_as_cokernel(homology));
    return ModulePresentation<F>::cokernel(P);
  }

  DeficiencyResult<F> result(int i) const {
    auto m = module(i);
    return DeficiencyResult<F>{i, m, invariants(m)};
  }

 private:
  RingPtr<F> ring_;
  FreeResolution<F> resolution_;
  std::vector<Matrix<F>> duals_;  // duals_[k] : F_k^* -> F_{k+1}^*
};

template <CoefficientField F>
ModulePresentation<F> deficiency_module(const ModulePresentation<F>& M, int i) {
  return DeficiencyModules<F>(M).module(i);
}

/// w^{dim M}(M). The zero module has no canonical module.
template <CoefficientField F>
ModulePresentation<F> canonical_module(const ModulePresentation<F>& M) {
  const int d = dim(M);
  if (d == kMinusInfinity) throw std::domain_error("canonical module of the zero module");
  return deficiency_module(M, d);
}

template <CoefficientField F>
struct ScmModuleReport {
  bool scm = true;
  ModuleInvariants module;
  std::vector<DeficiencyResult<F>> layers;  // i = 0 .. d-1 (or d when strict)
};

/// M is sequentially Cohen-Macaulay iff every w^i with 0 <= i < dim M is zero
/// or Cohen-Macaulay of dimension i. `strict` also checks i = dim M.
/// Stops at the first failing index unless `exhaustive`.
template <CoefficientField F>
ScmModuleReport<F> scm_module_report(const ModulePresentation<F>& M, bool strict = false, bool exhaustive = false) {
  ScmModuleReport<F> rep;
  rep.module = invariants(M);
  if (rep.module.is_zero()) return rep;
  DeficiencyModules<F> omega(M);
  const int last = strict ? rep.module.dim : rep.module.dim - 1;
  for (int i = 0; i <= last; ++i) {
    auto r = omega.result(i);
    bool ok = r.invariants.is_zero() || (r.invariants.dim == i && r.invariants.depth == i);
    rep.layers.push_back(std::move(r));
    if (!ok) {
      rep.scm = false;
      if (!exhaustive) break;
    }
  }
  return rep;
}

template <CoefficientField F>
bool is_scm_module(const ModulePresentation<F>& M, bool strict = false) {
  return scm_module_report(M, strict).scm;
}

/// The canonical module is Cohen-Macaulay.
template <CoefficientField F>
bool is_ccm(const ModulePresentation<F>& M) {
  return is_cohen_macaulay(canonical_module(M));
}

}  // namespace scmkit
