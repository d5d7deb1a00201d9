#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hdeg/free_module.hpp"

namespace hdeg {

/// Guards against runaway computations.
struct Limits {
  int degree_cap = 64;
  int sample_cap = 50;
};

/// Homogeneous generating set of a submodule of a graded free module.
struct SubmoduleGens {
  FreeModulePtr ambient;
  std::vector<FreeElement> gens;

  SubmoduleGens() = default;
  SubmoduleGens(FreeModulePtr amb, std::vector<FreeElement> g = {});

  /// Throws InputError unless all generators are homogeneous and share the ambient.
  void validate() const;
  bool empty() const { return gens.empty(); }
};

/// The whole free module (its basis).
SubmoduleGens whole_module(const FreeModulePtr& ambient);
/// p * F for each generator p of an ideal.
SubmoduleGens ideal_times_module(const IdealGens& ideal, const FreeModulePtr& ambient);
SubmoduleGens ideal_as_submodule(const IdealGens& ideal, const FreeModulePtr& rank_one);
SubmoduleGens concat(const SubmoduleGens& a, const SubmoduleGens& b);

/// Reduced, monic Groebner basis, elements sorted by increasing lead term.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(FreeModulePtr ambient, std::vector<FreeElement> elements);

  const FreeModulePtr& ambient() const { return ambient_; }
  const std::vector<FreeElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero() const { return elements_.empty(); }

  FreeElement normal_form(const FreeElement& f) const;
  bool contains(const FreeElement& f) const { return normal_form(f).is_zero(); }
  bool contains(const GroebnerBasis& other) const;
  /// Leading terms (coefficient one) grouped by component.
  std::vector<std::vector<Monomial>> lead_monomials() const;

  SubmoduleGens as_gens() const { return SubmoduleGens(ambient_, elements_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);
  friend bool operator!=(const GroebnerBasis& a, const GroebnerBasis& b) { return !(a == b); }

 private:
  FreeModulePtr ambient_;
  std::vector<FreeElement> elements_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<std::uint32_t> masks_;
};

struct GroebnerOptions {
  Limits limits;
  /// Stop once every monomial of some degree is a lead term; only sound
  /// when the quotient has finite length, which callers must know.
  bool stop_when_finite = false;
};

struct GroebnerResult {
  GroebnerBasis basis;
  /// Indices of input generators forming a minimal homogeneous generating set.
  std::vector<std::size_t> minimal;
};

GroebnerResult groebner_compute(const SubmoduleGens& g, const GroebnerOptions& opts = {});
GroebnerBasis groebner_basis(const SubmoduleGens& g, const Limits& limits = {});
FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb);
/// Minimal homogeneous generators (a subset of the input).
SubmoduleGens minimal_generators(const SubmoduleGens& g, const Limits& limits = {});

}  // namespace hdeg
