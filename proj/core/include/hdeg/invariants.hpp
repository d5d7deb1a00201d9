#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdeg/hilbert.hpp"
#include "hdeg/homology.hpp"
#include "hdeg/module.hpp"

namespace hdeg {

/// Window for the superficiality test: c ranges over [c_min, c_max] and
/// the identity is checked for n = c .. c + width, never beyond cap.
struct SuperficialWindow {
  int c_min = 1;
  int c_max = 4;
  int width = 4;
  int cap = 12;
};

enum class Superficial { yes, no, indeterminate };
std::string to_string(Superficial s);

/// Outcome of the d-sequence test; i and j are 1-based and only set on failure.
struct DSequenceResult {
  bool holds = true;
  int i = 0;
  int j = 0;
};

struct DSequenceCoefficients {
  HilbertCoefficients fitted;
  /// e^0..e^d assembled from colon and H^0 lengths.
  std::vector<std::int64_t> from_lengths;
  std::int64_t colon_length = 0;
  /// l(H^0(M / Q_k M)) for k = 0..d-1.
  std::vector<std::int64_t> h0_lengths;
};

struct InvariantReport {
  int dim = kDimZeroModule;
  int depth = kDepthZeroModule;
  HilbertCoefficients e;
  std::int64_t length_mod_I = 0;
  std::int64_t hdeg = 0;
  std::vector<std::int64_t> torsions;
  std::int64_t h0_length = 0;
  std::optional<std::int64_t> sv_invariant;
  /// Only for parameter ideals (as many generators as dim M).
  std::optional<std::int64_t> chi1;
  std::vector<int> dual_dims;
  bool generalized_cm = false;
  bool unmixed = false;
  bool cohen_macaulay = false;
};

/// Memo tables for one computation.  Not shared between threads.
class InvariantSession {
 public:
  explicit InvariantSession(Limits limits = {}, SuperficialWindow window = {});

  const Limits& limits() const { return limits_; }
  const SuperficialWindow& window() const { return window_; }

  const LocalCohomologyDuals& duals(const Presentation& M);
  const HilbertCoefficients& coefficients(const Presentation& M, const IdealGens& I);
  std::int64_t hdeg(const Presentation& M, const IdealGens& I);
  std::int64_t torsion(const Presentation& M, const IdealGens& I, int i);
  std::int64_t h0_length(const Presentation& M);
  std::optional<std::int64_t> stuckrad_vogel(const Presentation& M);
  bool is_generalized_cm(const Presentation& M);
  bool is_unmixed(const Presentation& M);
  bool is_cohen_macaulay(const Presentation& M);
  DSequenceResult is_d_sequence(const IdealGens& a, const Presentation& M);
  Superficial is_superficial(const Polynomial& a, const Presentation& M, const IdealGens& I);
  DSequenceCoefficients dseq_coefficients(const IdealGens& a, const Presentation& M);
  std::int64_t chi1(const IdealGens& Q, const Presentation& M);
  InvariantReport report(const Presentation& M, const IdealGens& I);

 private:
  Limits limits_;
  SuperficialWindow window_;
  std::map<std::string, LocalCohomologyDuals> duals_;
  std::map<std::string, HilbertCoefficients> coeffs_;
  std::map<std::string, std::int64_t> hdeg_;
  std::map<std::string, std::int64_t> h0_;
};

std::int64_t hdeg(const Presentation& M, const IdealGens& I, const Limits& limits = {});
std::int64_t torsion(const Presentation& M, const IdealGens& I, int i, const Limits& limits = {});
std::int64_t h0_length(const Presentation& M, const Limits& limits = {});
std::optional<std::int64_t> stuckrad_vogel(const Presentation& M, const Limits& limits = {});
bool is_generalized_cm(const Presentation& M, const Limits& limits = {});
bool is_unmixed(const Presentation& M, const Limits& limits = {});
DSequenceResult is_d_sequence(const IdealGens& a, const Presentation& M, const Limits& limits = {});
Superficial is_superficial(const Polynomial& a, const Presentation& M, const IdealGens& I, const Limits& limits = {},
                           const SuperficialWindow& window = {});
DSequenceCoefficients dseq_coefficients(const IdealGens& a, const Presentation& M, const Limits& limits = {});

/// H^0_m(M) = (0 :_M m^infinity) as a submodule of the ambient (contains R).
SubmoduleGens h0_submodule(const Presentation& M, const Limits& limits = {});
/// The homogeneous maximal ideal (x_1, ..., x_n).
IdealGens maximal_ideal(const RingPtr& ring);
/// Stable text form of an ideal's reduced basis.
std::string ideal_key(const IdealGens& I, const Limits& limits = {});

}  // namespace hdeg
