#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdeg/groebner.hpp"
#include "hdeg/monomial_ideal.hpp"

namespace hdeg {

/// Graded module F / R given by generators (the basis of F, with twists)
/// and relations R.  The reduced Groebner basis of R is computed on
/// construction and defines equality.  Submodules of F / R are passed
/// around as submodules of F; R is added wherever it matters.
class Presentation {
 public:
  Presentation() = default;
  Presentation(FreeModulePtr ambient, std::vector<FreeElement> relations, const Limits& limits = {});
  Presentation(FreeModulePtr ambient, GroebnerBasis relations_gb);

  /// S / J as a cyclic module.
  static Presentation quotient_ring(const RingPtr& ring, const IdealGens& J, const Limits& limits = {});

  const FreeModulePtr& ambient() const { return ambient_; }
  const RingPtr& ring() const { return ambient_->ring(); }
  int rank() const { return ambient_->rank(); }
  const GroebnerBasis& relations_gb() const { return *gb_; }
  SubmoduleGens relations() const { return gb_->as_gens(); }
  bool is_zero() const;
  /// Stable text form of the ring, the twists and the reduced basis.
  std::string key() const;

  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  FreeModulePtr ambient_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

/// Length as a k-vector space; empty means infinite.
using Length = std::optional<std::int64_t>;

/// {u in source : sum u_j columns_j in N}.  `columns[j]` must be zero or
/// homogeneous of degree source->twist(j).
GroebnerBasis preimage(const FreeModulePtr& source, const std::vector<FreeElement>& columns, const SubmoduleGens& N,
                       const Limits& limits = {});

/// Relations among the generators; generator i sits in twist deg(g_i).
SubmoduleGens syzygies(const SubmoduleGens& g, const Limits& limits = {});

/// {m in M : f m in N}, as a submodule of the ambient free module (contains R).
SubmoduleGens colon_by_element(const SubmoduleGens& N, const Polynomial& f, const Presentation& M,
                               const Limits& limits = {});
/// Intersection of the element colons over the generators of J.
SubmoduleGens colon_by_ideal(const SubmoduleGens& N, const IdealGens& J, const Presentation& M, const Limits& limits = {});
SubmoduleGens colon_by_ideal(const SubmoduleGens& N, const SubmoduleGens& J, const Presentation& M,
                             const Limits& limits = {});
/// (N :_M J^infinity)
SubmoduleGens saturate(const SubmoduleGens& N, const IdealGens& J, const Presentation& M, const Limits& limits = {});
SubmoduleGens saturate(const SubmoduleGens& N, const SubmoduleGens& J, const Presentation& M, const Limits& limits = {});
SubmoduleGens intersect(const SubmoduleGens& N1, const SubmoduleGens& N2, const Limits& limits = {});

Length quotient_length(const Presentation& M);
/// Krull dimension; kDimZeroModule for the zero module.
int quotient_dimension(const Presentation& M);

/// M / N for a submodule N of the ambient.
Presentation quotient(const Presentation& M, const SubmoduleGens& N, const Limits& limits = {});
/// K / D for D inside K, both submodules of one free module.
Presentation subquotient(const SubmoduleGens& K, const SubmoduleGens& D, const Limits& limits = {});
/// (N + R) / R.
Presentation submodule_presentation(const Presentation& M, const SubmoduleGens& N, const Limits& limits = {});
/// Isomorphic presentation with a minimal number of generators.
Presentation prune(const Presentation& M, const Limits& limits = {});

/// I M as a submodule of the ambient (R not included).
SubmoduleGens ideal_times(const IdealGens& I, const Presentation& M);
IdealGens annihilator(const Presentation& M, const Limits& limits = {});
/// f M = 0 for every f in I.
bool annihilates(const IdealGens& I, const Presentation& M);

}  // namespace hdeg
