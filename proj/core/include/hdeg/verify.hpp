#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdeg/invariants.hpp"

namespace hdeg {

/// A module with a parameter ideal, plus where it came from.
struct ProblemInstance {
  std::string name;
  std::string family;  // "ex39", "ex46" or "custom"
  std::vector<std::pair<std::string, int>> parameters;
  RingPtr ring;
  IdealGens defining_ideal;
  Presentation module;
  IdealGens params;
};

/// S = k[x_1..x_l, y_1..y_l, z_1..z_m], J = (x) ∩ (y), Q = (x_i - y_i, z_j).
ProblemInstance gen_example_39(int l, int m, const Field& field = Field::rationals(), const Limits& limits = {});
/// S = k[x,y,z], J = (x) ∩ (y^l, z), Q = (x - y, x - z).
ProblemInstance gen_example_46(int l, const Field& field = Field::rationals(), const Limits& limits = {});

struct Consequences {
  bool evaluated = false;
  /// "given", "recombined", "unverified" or "not evaluated".
  std::string dseq_status = "not evaluated";
  IdealGens dseq_generators;
  bool qm_cap_h0_zero = true;
  bool q_kills_duals = true;
  /// thm2 only: (-1)^i e^i = T^i for 2 <= i <= d-1.
  std::vector<bool> torsion_identities;
  bool top_coefficient_zero = true;
  bool polynomial_exact = true;

  bool all_hold() const;
};

struct TheoremVerdict {
  std::string theorem;  // "thm1" or "thm2"
  int d = 0;
  std::int64_t chi1 = 0;
  std::int64_t hdeg = 0;
  std::int64_t e0 = 0;
  bool condition1 = false;
  /// Entry i-1 is (-1)^i e^i = T^i for i < d, the last entry (-1)^d e^d = l(H^0).
  std::vector<bool> condition2a;
  bool condition2b = false;
  /// thm2 condition (2): e^1 = -T^1.
  std::optional<bool> condition2;
  std::optional<bool> unmixed;
  bool equivalence_checked = false;
  bool equivalence_consistent = true;
  Consequences consequences;
  std::vector<std::string> witnesses;

  /// No metatheorem violation and no failed consequence.
  bool sound() const;
};

struct AuditCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::string relation;
  std::int64_t rhs = 0;
  bool pass = true;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_pass() const;
};

/// Random recombinations tried when the given generators are not a d-sequence.
inline constexpr int kRecombinationTrials = 20;

TheoremVerdict check_thm1(const ProblemInstance& P, InvariantSession& session, std::uint64_t seed = 0);
TheoremVerdict check_thm2(const ProblemInstance& P, InvariantSession& session, std::uint64_t seed = 0);
AuditReport audit_inequalities(const ProblemInstance& P, InvariantSession& session);

/// Stable 64-bit hash of the instance name and parameters (FNV-1a).
std::uint64_t instance_seed(const ProblemInstance& P, std::uint64_t seed);

/// Searches same-degree linear recombinations of Q generating the same
/// ideal that form a d-sequence on M.
std::optional<IdealGens> find_dsequence_generators(const IdealGens& Q, const Presentation& M, InvariantSession& session,
                                                   std::uint64_t seed, int trials = kRecombinationTrials);

}  // namespace hdeg
