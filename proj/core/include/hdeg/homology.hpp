#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "hdeg/hilbert.hpp"
#include "hdeg/module.hpp"

namespace hdeg {

/// Homogeneous map of free modules given by the images of the source basis.
struct GradedMap {
  FreeModulePtr source;
  FreeModulePtr target;
  std::vector<FreeElement> columns;

  FreeElement apply(const FreeElement& u) const;
};

/// outer after inner
GradedMap compose(const GradedMap& outer, const GradedMap& inner);
bool is_zero_map(const GradedMap& f);

/// F_0 <- F_1 <- ... <- F_p; maps[i] is the differential F_{i+1} -> F_i.
struct FreeComplex {
  std::vector<FreeModulePtr> modules;
  std::vector<GradedMap> maps;

  int length() const { return static_cast<int>(maps.size()); }
  std::vector<int> ranks() const;
  /// Every composite of consecutive differentials vanishes.
  bool is_complex() const;
};

/// Minimal graded free resolution of the pruned module, truncated after
/// homological degree `up_to`.
FreeComplex free_resolution(const Presentation& M, int up_to, const Limits& limits = {});

/// Ext^i_S(M, S) for i = 0..n, each pruned.
std::vector<Presentation> ext_modules(const Presentation& M, const Limits& limits = {});

inline constexpr int kDepthZeroModule = std::numeric_limits<int>::max();

/// M_j = Ext^{n-j}_S(M, S), j = 0..n, with their Krull dimensions.
struct LocalCohomologyDuals {
  int n = 0;
  int dim = kDimZeroModule;
  int depth = kDepthZeroModule;
  std::vector<Presentation> duals;
  std::vector<int> dims;
};

/// Throws EngineError if some dim M_j exceeds j.
LocalCohomologyDuals local_cohomology_duals(const Presentation& M, const Limits& limits = {});

/// l(H_i(a; M)) for i = 1..len(a).  Requires l(M / aM) finite.
std::vector<std::int64_t> koszul_homology_lengths(const IdealGens& a, const Presentation& M, const Limits& limits = {});

/// First Euler characteristic of a parameter ideal, from Koszul homology,
/// cross-checked against l(M/QM) - e^0_Q(M).
std::int64_t euler_char_1(const IdealGens& Q, const Presentation& M, const Limits& limits = {});
/// Same, with e^0_Q(M) already known.
std::int64_t euler_char_1(const IdealGens& Q, const Presentation& M, std::int64_t e0, const Limits& limits = {});

}  // namespace hdeg
