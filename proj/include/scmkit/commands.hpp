#pragma once

// One computation against a parsed session, and its text/JSON rendering.

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scmkit/deficiency.hpp"
#include "scmkit/filter.hpp"
#include "scmkit/session.hpp"

namespace scmkit {

/// Raised for problems with the request itself (bad target, missing index,
/// missing decomposition); the CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Verdict {
  std::string op;
  std::string target;
  nlohmann::ordered_json result;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string text;  // human rendering of `result`
  long timing_ms = 0;
};

inline const std::vector<std::string>& known_ops() {
  static const std::vector<std::string> ops{"dim",           "depth",          "deficiency-module",
                                            "canonical-module", "is-cm",       "is-ccm",
                                            "is-scm",        "filter-ideal",   "minimum-dimension",
                                            "unmixed-layer", "is-unmixed",     "primary-decomposition"};
  return ops;
}

struct CommandOptions {
  std::optional<int> index;
  bool strict_scm = false;
  unsigned threads = 1;
};

inline nlohmann::ordered_json extended_json(int v) {
  if (v == kInfinity || v == kMinusInfinity) return format_extended(v);
  return v;
}

namespace detail {

template <CoefficientField F>
nlohmann::ordered_json poly_list(const std::vector<Poly<F>>& ps) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

/// Canonical form: the reduced Groebner basis.
template <CoefficientField F>
nlohmann::ordered_json ideal_json(const Ideal<F>& I) {
  return {{"type", "ideal"}, {"generators", poly_list(I.basis())}};
}

template <CoefficientField F>
std::string ideal_text(const Ideal<F>& I) {
  return I.canonical().to_string();
}

template <CoefficientField F>
nlohmann::ordered_json matrix_json(const Matrix<F>& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.entry(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <CoefficientField F>
nlohmann::ordered_json module_json(const ModulePresentation<F>& M, bool raw = false) {
  const bool zero = M.is_zero();
  if (zero && !raw) return {{"type", "module"}, {"zero", true}, {"text", "0"}};
  return {{"type", "module"},
          {"zero", zero},
          {"form", M.is_cokernel() ? "cokernel" : "subquotient"},
          {"generator_degrees", M.ambient().degrees},
          {"generators", matrix_json(M.generators())},
          {"relations", matrix_json(M.relations())},
          {"text", M.to_string()}};
}

template <CoefficientField F>
std::string module_text(const ModulePresentation<F>& M, bool raw = false) {
  return !raw && M.is_zero() ? "0" : M.to_string();
}

template <CoefficientField F>
nlohmann::ordered_json decomposition_json(const Decomposition<F>& D) {
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : D.components())
    cs.push_back({{"primary", poly_list(c.primary.basis())}, {"radical", poly_list(c.radical.basis())}, {"dim", c.dim}});
  return {{"type", "decomposition"}, {"provenance", to_string(D.provenance())}, {"components", cs}};
}

template <CoefficientField F>
std::string decomposition_text(const Decomposition<F>& D) {
  std::string s;
  for (std::size_t k = 0; k < D.components().size(); ++k) {
    const auto& c = D.components()[k];
    if (k) s += "\n";
    s += ideal_text(c.primary) + "  radical " + ideal_text(c.radical) + "  dim " + std::to_string(c.dim);
  }
  return s;
}

template <CoefficientField F>
class Runner {
 public:
  Runner(const Session& s, const std::string& target, const CommandOptions& opt)
      : s_(s), objs_(s.objects<F>()), target_(target), opt_(opt) {}

  void run(const std::string& op, Verdict& v) {
    const ObjectKind k = s_.kind(target_);
    if (k != ObjectKind::Ideal && k != ObjectKind::Module)
      throw InputError("'" + target_ + "' is a " + to_string(k) + "; operations need an ideal or a module");
    if (op == "dim" || op == "depth" || op == "is-cm") {
      auto M = module();
      auto inv = invariants(M);
      v.details = {{"object", object_label()}, {"dim", extended_json(inv.dim)}, {"depth", extended_json(inv.depth)}};
      if (!inv.is_zero()) v.details["pd"] = inv.pd;
      if (op == "is-cm") set_bool(v, inv.is_cohen_macaulay());
      else set_int(v, op == "dim" ? inv.dim : inv.depth);
    } else if (op == "deficiency-module") {
      const int i = need_index();
      auto M = module();
      auto w = deficiency_module(M, i);
      auto inv = invariants(w);
      v.details = {{"object", object_label()}, {"index", i}, {"dim", extended_json(inv.dim)}, {"depth", extended_json(inv.depth)}};
      set_module(v, w);
    } else if (op == "canonical-module") {
      auto M = module();
      const int d = dim(M);
      if (d == kMinusInfinity) throw InputError("the zero module has no canonical module");
      auto w = deficiency_module(M, d);
      auto inv = invariants(w);
      v.details = {{"object", object_label()}, {"index", d}, {"dim", extended_json(inv.dim)}, {"depth", extended_json(inv.depth)}};
      set_module(v, w);
    } else if (op == "is-ccm") {
      auto M = module();
      const int d = dim(M);
      if (d == kMinusInfinity) throw InputError("the zero module has no canonical module");
      auto inv = invariants(deficiency_module(M, d));
      v.details = {{"object", object_label()}, {"canonical_dim", extended_json(inv.dim)}, {"canonical_depth", extended_json(inv.depth)}};
      set_bool(v, inv.is_cohen_macaulay());
    } else if (op == "is-scm") {
      if (s_.kind(target_) == ObjectKind::Ideal) scm_ideal(v);
      else scm_module(v);
    } else if (op == "filter-ideal") {
      const int i = need_index();
      FilterProfile<F> fp(decomposition());
      check_range(i, -1, fp.dim(), "filter index");
      set_ideal(v, fp.filter_ideal(i));
      v.details = {{"index", i}, {"dim", fp.dim()}, {"provenance", to_string(fp.decomposition().provenance())}};
      add_warnings(v, fp.decomposition());
    } else if (op == "minimum-dimension") {
      FilterProfile<F> fp(decomposition());
      auto dims = nlohmann::ordered_json::array();
      for (const auto& c : fp.decomposition().components()) dims.push_back(c.dim);
      set_int(v, fp.minimum_dimension());
      v.details = {{"dim", fp.dim()}, {"component_dims", dims}};
      add_warnings(v, fp.decomposition());
    } else if (op == "unmixed-layer") {
      const int i = need_index();
      FilterProfile<F> fp(decomposition());
      check_range(i, 1, fp.dim(), "unmixed layer index");
      auto U = fp.unmixed_layer(i);
      v.details = {{"index", i}, {"zero", fp.layer_is_zero(i)}};
      set_module(v, U, true);
      add_warnings(v, fp.decomposition());
    } else if (op == "is-unmixed") {
      FilterProfile<F> fp(decomposition());
      auto zero = nlohmann::ordered_json::array();
      for (int i = 1; i <= fp.dim(); ++i) zero.push_back({{"i", i}, {"zero", fp.layer_is_zero(i)}});
      set_bool(v, fp.is_unmixed());
      v.details = {{"dim", fp.dim()}, {"layers", zero}};
      add_warnings(v, fp.decomposition());
    } else if (op == "primary-decomposition") {
      auto D = decomposition();
      v.result = decomposition_json(D);
      v.text = decomposition_text(D);
      v.details = {{"components", D.components().size()}};
      add_warnings(v, D);
    } else {
      throw InputError("unknown operation '" + op + "'");
    }
  }

 private:
  void set_bool(Verdict& v, bool b) {
    v.result = b;
    v.text = b ? "true" : "false";
  }
  void set_int(Verdict& v, int x) {
    v.result = extended_json(x);
    v.text = format_extended(x);
  }
  void set_ideal(Verdict& v, const Ideal<F>& I) {
    v.result = ideal_json(I);
    v.text = ideal_text(I);
  }
  void set_module(Verdict& v, const ModulePresentation<F>& M, bool raw = false) {
    v.result = module_json(M, raw);
    v.text = module_text(M, raw);
  }

  int need_index() const {
    if (!opt_.index) throw InputError("this operation needs --index");
    return *opt_.index;
  }
  static void check_range(int i, int lo, int hi, const std::string& what) {
    if (i < lo || i > hi)
      throw InputError(what + " " + std::to_string(i) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }

  std::string object_label() const {
    return s_.kind(target_) == ObjectKind::Ideal ? "S/" + target_ : target_;
  }

  ModulePresentation<F> module() const {
    if (s_.kind(target_) == ObjectKind::Module) return objs_.modules.at(target_).module;
    return ModulePresentation<F>::quotient(ideal());
  }

  const Ideal<F>& ideal() const {
    if (s_.kind(target_) != ObjectKind::Ideal) throw InputError("'" + target_ + "' is not an ideal");
    return objs_.ideals.at(target_).ideal;
  }

  Decomposition<F> decomposition() const {
    const Ideal<F>& I = ideal();
    if (I.is_unit()) throw InputError("the unit ideal is not a valid target");
    if (auto d = s_.decomposition_for(target_)) return objs_.decompositions.at(*d).decomposition;
    const auto& b = objs_.ideals.at(target_);
    if (b.graph) return binomial_edge_primes(s_.graph(*b.graph), I.ring());
    if (I.is_monomial()) return monomial_decomposition(I);
    throw InputError("'" + target_ + "' is neither monomial nor a binomial edge ideal; declare a decomposition for it");
  }

  static void add_warnings(Verdict& v, const Decomposition<F>& D) {
    if (!D.warnings().empty()) v.details["warnings"] = D.warnings();
  }

  void scm_ideal(Verdict& v) {
    FilterProfile<F> fp(decomposition());
    auto rep = fp.scm_report(opt_.threads);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"i", c.index}, {"depth", extended_json(c.depth)}, {"required", c.index + 1}, {"pass", c.passed}});
    v.details = {{"criterion", "filter-depth"}, {"dim", rep.dim}, {"checks", checks}};
    add_warnings(v, fp.decomposition());
    set_bool(v, rep.scm);
  }

  void scm_module(Verdict& v) {
    auto rep = scm_module_report(module(), opt_.strict_scm);
    auto layers = nlohmann::ordered_json::array();
    for (const auto& l : rep.layers) {
      bool zero = l.invariants.is_zero();
      bool pass = zero || (l.invariants.dim == l.index && l.invariants.depth == l.index);
      layers.push_back({{"i", l.index},
                        {"zero", zero},
                        {"dim", extended_json(l.invariants.dim)},
                        {"depth", extended_json(l.invariants.depth)},
                        {"pass", pass}});
    }
    v.details = {{"criterion", "deficiency"},
                 {"strict", opt_.strict_scm},
                 {"dim", extended_json(rep.module.dim)},
                 {"depth", extended_json(rep.module.depth)},
                 {"layers", layers}};
    set_bool(v, rep.scm);
  }

  const Session& s_;
  const Objects<F>& objs_;
  std::string target_;
  CommandOptions opt_;
};

}  // namespace detail

inline Verdict run_command(const Session& s, const std::string& op, const std::string& target,
                           const CommandOptions& opt = {}) {
  if (std::find(known_ops().begin(), known_ops().end(), op) == known_ops().end())
    throw InputError("unknown operation '" + op + "'");
  if (!s.has(target)) throw InputError("unbound name '" + target + "'");
  if (s.kind(target) == ObjectKind::Graph || s.kind(target) == ObjectKind::Ring)
    throw InputError("'" + target + "' is a " + to_string(s.kind(target)) + "; operations need an ideal or a module");
  Verdict v;
  v.op = op;
  v.target = target;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (s.field_kind(target) == FieldKind::Rationals) detail::Runner<Rationals>(s, target, opt).run(op, v);
    else detail::Runner<PrimeField>(s, target, opt).run(op, v);
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  v.timing_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  return v;
}

inline nlohmann::ordered_json to_json(const Verdict& v) {
  return {{"op", v.op}, {"target", v.target}, {"ok", true}, {"result", v.result}, {"details", v.details},
          {"timing_ms", v.timing_ms}};
}

namespace detail {

inline std::string joined_ideal(const nlohmann::ordered_json& gens) {
  std::string s = "ideal (";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + gens[k].get<std::string>();
  return s + ")";
}

inline std::string result_text(const nlohmann::ordered_json& r) {
  if (r.is_boolean()) return r.get<bool>() ? "true" : "false";
  if (r.is_number_integer()) return std::to_string(r.get<int>());
  if (r.is_string()) return r.get<std::string>();
  const std::string type = r.at("type");
  if (type == "ideal") return joined_ideal(r.at("generators"));
  if (type == "module") return r.at("text");
  if (type == "decomposition") {
    std::string s;
    for (const auto& c : r.at("components")) {
      if (!s.empty()) s += "\n";
      s += joined_ideal(c.at("primary")) + "  radical " + joined_ideal(c.at("radical")) + "  dim " +
           std::to_string(c.at("dim").get<int>());
    }
    return s;
  }
  throw std::invalid_argument("unknown result type '" + type + "'");
}

}  // namespace detail

/// Inverse of to_json for successful verdicts.
inline Verdict verdict_from_json(const nlohmann::ordered_json& j) {
  if (!j.at("ok").get<bool>()) throw std::invalid_argument("not a successful verdict");
  Verdict v;
  v.op = j.at("op");
  v.target = j.at("target");
  v.result = j.at("result");
  v.details = j.at("details");
  v.timing_ms = j.at("timing_ms");
  v.text = detail::result_text(v.result);
  return v;
}

/// Flattened details, one "key: value" line each.
inline std::string details_text(const nlohmann::ordered_json& d, const std::string& prefix = "") {
  std::string out;
  for (auto it = d.begin(); it != d.end(); ++it) {
    const auto& val = it.value();
    if (val.is_array() && !val.empty() && val.front().is_object()) {
      for (const auto& row : val) {
        std::string line;
        for (auto jt = row.begin(); jt != row.end(); ++jt)
          line += (line.empty() ? "" : " ") + jt.key() + "=" + (jt->is_string() ? jt->get<std::string>() : jt->dump());
        out += prefix + it.key() + ": " + line + "\n";
      }
    } else {
      out += prefix + it.key() + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
    }
  }
  return out;
}

inline std::string emit(const Verdict& v, const std::string& format) {
  if (format == "json") return to_json(v).dump(2) + "\n";
  if (format != "text") throw InputError("unknown format '" + format + "'");
  std::string out = v.text + "\n";
  if (!v.details.empty()) out += details_text(v.details, "  ");
  return out;
}

inline std::string emit_error(const std::string& op, const std::string& target, const std::string& message,
                              const std::string& format) {
  if (format == "json")
    return nlohmann::ordered_json{{"op", op}, {"target", target}, {"ok", false}, {"error", message}}.dump(2) + "\n";
  return "error: " + message + "\n";
}

}  // namespace scmkit
