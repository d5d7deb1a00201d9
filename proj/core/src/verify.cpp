#include "hdeg/verify.hpp"

#include <map>
#include <random>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

GroebnerBasis ideal_gb(const IdealGens& I, const Limits& limits) {
  auto F = make_free_module(I.front().ring(), {0});
  return groebner_basis(ideal_as_submodule(I, F), limits);
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Basics {
  int d;
  InvariantReport report;
};

Basics parameter_basics(const ProblemInstance& P, InvariantSession& session) {
  const Presentation& M = P.module;
  if (M.is_zero()) throw InputError("the module is zero");
  const int d = quotient_dimension(M);
  if (d < 1) throw InputError("theorem checks need dim M >= 1");
  if (static_cast<int>(P.params.size()) != d)
    throw InputError("not a parameter ideal: " + std::to_string(P.params.size()) + " generators for dim M = " + std::to_string(d));
  Length l = quotient_length(quotient(M, ideal_times(P.params, M), session.limits()));
  if (!l) throw InputError("not a parameter ideal: M/QM has infinite length");
  return {d, session.report(M, P.params)};
}

std::int64_t signed_e(const HilbertCoefficients& h, int i) { return i % 2 ? -h.e[i] : h.e[i]; }

bool exact_from_zero(const HilbertCoefficients& h) {
  const int W = h.s + 2;
  for (int n = 0; n <= h.postulation + W; ++n)
    if (n >= static_cast<int>(h.samples.size()) || h.samples[n] != h.polynomial_at(n)) return false;
  return true;
}

void dsequence_consequence(const ProblemInstance& P, InvariantSession& session, std::uint64_t seed, Consequences& c,
                           std::vector<std::string>& witnesses) {
  if (session.is_d_sequence(P.params, P.module).holds) {
    c.dseq_status = "given";
    c.dseq_generators = P.params;
    return;
  }
  auto found = find_dsequence_generators(P.params, P.module, session, seed);
  if (found) {
    c.dseq_status = "recombined";
    c.dseq_generators = *found;
  } else {
    c.dseq_status = "unverified";
    witnesses.push_back("consequence unverified: no d-sequence among " + std::to_string(kRecombinationTrials) +
                        " random recombinations of the parameters");
  }
}

void annihilation_consequence(const ProblemInstance& P, InvariantSession& session, int d, Consequences& c,
                              std::vector<std::string>& witnesses) {
  const LocalCohomologyDuals& L = session.duals(P.module);
  for (int i = 1; i <= d - 2; ++i)
    if (!annihilates(P.params, L.duals[i])) {
      c.q_kills_duals = false;
      witnesses.push_back("Q does not annihilate M_" + std::to_string(i));
    }
}

}  // namespace

bool Consequences::all_hold() const {
  if (!evaluated) return true;
  for (bool b : torsion_identities)
    if (!b) return false;
  return qm_cap_h0_zero && q_kills_duals && top_coefficient_zero && polynomial_exact && dseq_status != "failed";
}

bool TheoremVerdict::sound() const { return equivalence_consistent && consequences.all_hold(); }

bool AuditReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ProblemInstance gen_example_39(int l, int m, const Field& field, const Limits& limits) {
  if (l < 2 || m < 1) throw InputError("ex39 needs l >= 2 and m >= 1");
  if (2 * l + m > kMaxVars) throw InputError("ex39 instance needs more than " + std::to_string(kMaxVars) + " variables");
  std::vector<std::string> names;
  for (int i = 1; i <= l; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= l; ++i) names.push_back("y" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("z" + std::to_string(i));
  ProblemInstance P;
  P.family = "ex39";
  P.name = "ex39(l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")";
  P.parameters = {{"l", l}, {"m", m}};
  P.ring = make_ring(field, names);
  auto F = make_free_module(P.ring, {0});
  IdealGens xs, ys;
  for (int i = 0; i < l; ++i) xs.push_back(Polynomial::variable(P.ring, i));
  for (int i = 0; i < l; ++i) ys.push_back(Polynomial::variable(P.ring, l + i));
  auto J = intersect(ideal_as_submodule(xs, F), ideal_as_submodule(ys, F), limits);
  for (const auto& g : J.gens) P.defining_ideal.push_back(g.component(0));
  P.module = Presentation::quotient_ring(P.ring, P.defining_ideal, limits);
  for (int i = 0; i < l; ++i) P.params.push_back(xs[i] - ys[i]);
  for (int i = 0; i < m; ++i) P.params.push_back(Polynomial::variable(P.ring, 2 * l + i));
  return P;
}

ProblemInstance gen_example_46(int l, const Field& field, const Limits& limits) {
  if (l < 1) throw InputError("ex46 needs l >= 1");
  if (l > 255) throw InputError("ex46 exponent too large");
  ProblemInstance P;
  P.family = "ex46";
  P.name = "ex46(l=" + std::to_string(l) + ")";
  P.parameters = {{"l", l}};
  P.ring = make_ring(field, {"x", "y", "z"});
  auto F = make_free_module(P.ring, {0});
  Polynomial x = Polynomial::variable(P.ring, 0), y = Polynomial::variable(P.ring, 1), z = Polynomial::variable(P.ring, 2);
  auto J = intersect(ideal_as_submodule({x}, F), ideal_as_submodule({y.pow(l), z}, F), limits);
  for (const auto& g : J.gens) P.defining_ideal.push_back(g.component(0));
  P.module = Presentation::quotient_ring(P.ring, P.defining_ideal, limits);
  P.params = {x - y, x - z};
  return P;
}

std::uint64_t instance_seed(const ProblemInstance& P, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](unsigned char b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  for (char ch : P.name) mix(static_cast<unsigned char>(ch));
  for (const auto& [k, v] : P.parameters) {
    for (char ch : k) mix(static_cast<unsigned char>(ch));
    for (int s = 0; s < 32; s += 8) mix(static_cast<unsigned char>(static_cast<std::uint32_t>(v) >> s));
  }
  for (int s = 0; s < 64; s += 8) mix(static_cast<unsigned char>(seed >> s));
  return h;
}

std::optional<IdealGens> find_dsequence_generators(const IdealGens& Q, const Presentation& M, InvariantSession& session,
                                                   std::uint64_t seed, int trials) {
  if (Q.empty()) return std::nullopt;
  const RingPtr& ring = Q.front().ring();
  const Field& k = ring->field();
  std::mt19937_64 rng(seed);
  auto coefficient = [&]() {
    if (k.is_rational()) return k.from_int(static_cast<std::int64_t>(rng() % 21) - 10);
    return k.from_int(static_cast<std::int64_t>(rng() % k.characteristic()));
  };
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < Q.size(); ++i) by_degree[*Q[i].degree()].push_back(i);
  const GroebnerBasis target = ideal_gb(Q, session.limits());

  for (int t = 0; t < trials; ++t) {
    IdealGens cand(Q.size(), Polynomial(ring));
    for (const auto& [deg, idx] : by_degree)
      for (std::size_t r : idx)
        for (std::size_t c : idx) cand[r] = cand[r] + Q[c].scaled(coefficient());
    bool nonzero = true;
    for (const auto& g : cand) nonzero = nonzero && !g.is_zero();
    if (!nonzero || ideal_gb(cand, session.limits()) != target) continue;
    if (session.is_d_sequence(cand, M).holds) return cand;
  }
  return std::nullopt;
}

TheoremVerdict check_thm1(const ProblemInstance& P, InvariantSession& session, std::uint64_t seed) {
  Basics b = parameter_basics(P, session);
  const InvariantReport& r = b.report;
  const int d = b.d;
  TheoremVerdict v;
  v.theorem = "thm1";
  v.d = d;
  v.chi1 = *r.chi1;
  v.hdeg = r.hdeg;
  v.e0 = r.e.e[0];
  v.condition1 = v.chi1 == v.hdeg - v.e0;
  for (int i = 1; i <= d - 1; ++i) v.condition2a.push_back(signed_e(r.e, i) == r.torsions[i - 1]);
  v.condition2a.push_back(signed_e(r.e, d) == r.h0_length);
  v.condition2b = exact_from_zero(r.e);
  bool two = v.condition2b;
  for (bool x : v.condition2a) two = two && x;
  v.equivalence_checked = true;
  v.equivalence_consistent = v.condition1 == two;
  if (!v.condition1) v.witnesses.push_back("condition (1) fails: chi1 = " + std::to_string(v.chi1) + ", hdeg - e0 = " + std::to_string(v.hdeg - v.e0));
  for (int i = 1; i <= d; ++i)
    if (!v.condition2a[i - 1])
      v.witnesses.push_back("condition (2a) fails at i = " + std::to_string(i) + ": (-1)^i e^i = " + std::to_string(signed_e(r.e, i)) +
                            ", expected " + std::to_string(i < d ? r.torsions[i - 1] : r.h0_length));
  if (!v.condition2b)
    v.witnesses.push_back("condition (2b) fails: Hilbert polynomial agrees only from n = " + std::to_string(r.e.postulation));
  if (!v.equivalence_consistent) v.witnesses.push_back("metatheorem violation: (1) and (2a and 2b) disagree");

  if (v.condition1) {
    Consequences& c = v.consequences;
    c.evaluated = true;
    dsequence_consequence(P, session, instance_seed(P, seed), c, v.witnesses);
    const Limits& lim = session.limits();
    SubmoduleGens qm = concat(ideal_times(P.params, P.module), P.module.relations());
    auto cap = groebner_basis(intersect(qm, h0_submodule(P.module, lim), lim), lim);
    c.qm_cap_h0_zero = cap == P.module.relations_gb();
    if (!c.qm_cap_h0_zero) v.witnesses.push_back("QM meets H^0 nontrivially");
    annihilation_consequence(P, session, d, c, v.witnesses);
  }
  return v;
}

TheoremVerdict check_thm2(const ProblemInstance& P, InvariantSession& session, std::uint64_t seed) {
  if (quotient_dimension(P.module) < 2) throw InputError("thm2 check needs dim M >= 2");
  Basics b = parameter_basics(P, session);
  const InvariantReport& r = b.report;
  const int d = b.d;
  TheoremVerdict v;
  v.theorem = "thm2";
  v.d = d;
  v.chi1 = *r.chi1;
  v.hdeg = r.hdeg;
  v.e0 = r.e.e[0];
  v.unmixed = r.unmixed;
  v.condition1 = v.chi1 == v.hdeg - v.e0;
  v.condition2 = r.e.e[1] == -r.torsions[0];
  for (int i = 1; i <= d - 1; ++i) v.condition2a.push_back(signed_e(r.e, i) == r.torsions[i - 1]);
  v.condition2a.push_back(signed_e(r.e, d) == r.h0_length);
  v.condition2b = exact_from_zero(r.e);
  if (!v.condition1) v.witnesses.push_back("condition (1) fails: chi1 = " + std::to_string(v.chi1) + ", hdeg - e0 = " + std::to_string(v.hdeg - v.e0));
  if (!*v.condition2)
    v.witnesses.push_back("condition (2) fails: e1 = " + std::to_string(r.e.e[1]) + ", T1 = " + std::to_string(r.torsions[0]));
  if (r.unmixed) {
    v.equivalence_checked = true;
    v.equivalence_consistent = v.condition1 == *v.condition2;
    if (!v.equivalence_consistent) v.witnesses.push_back("metatheorem violation: unmixed module with (1) and (2) disagreeing");
  } else {
    v.witnesses.push_back("module is mixed: equivalence not asserted");
  }

  if (r.unmixed && *v.condition2) {
    Consequences& c = v.consequences;
    c.evaluated = true;
    for (int i = 2; i <= d - 1; ++i) {
      bool ok = signed_e(r.e, i) == r.torsions[i - 1];
      c.torsion_identities.push_back(ok);
      if (!ok) v.witnesses.push_back("(-1)^i e^i = T^i fails at i = " + std::to_string(i));
    }
    c.top_coefficient_zero = r.e.e[d] == 0;
    if (!c.top_coefficient_zero) v.witnesses.push_back("e^d = " + std::to_string(r.e.e[d]) + " is not zero");
    c.polynomial_exact = v.condition2b;
    if (!c.polynomial_exact) v.witnesses.push_back("Hilbert polynomial not exact from n = 0 (e = " + join_ints(r.e.e) + ")");
    dsequence_consequence(P, session, instance_seed(P, seed), c, v.witnesses);
    annihilation_consequence(P, session, d, c, v.witnesses);
  }
  return v;
}

AuditReport audit_inequalities(const ProblemInstance& P, InvariantSession& session) {
  Basics b = parameter_basics(P, session);
  const InvariantReport& r = b.report;
  AuditReport a;
  auto add = [&](std::string name, std::int64_t lhs, std::string rel, std::int64_t rhs) {
    bool pass = rel == ">=" ? lhs >= rhs : lhs <= rhs;
    a.checks.push_back({std::move(name), lhs, std::move(rel), rhs, pass});
  };
  add("chi1 >= 0", *r.chi1, ">=", 0);
  add("chi1 <= hdeg - e0", *r.chi1, "<=", r.hdeg - r.e.e[0]);
  add("e1 <= 0", r.e.e[1], "<=", 0);
  if (b.d >= 2) add("e1 >= -T1", r.e.e[1], ">=", -r.torsions[0]);
  for (std::size_t j = 0; j < r.dual_dims.size(); ++j)
    add("dim M_" + std::to_string(j) + " <= " + std::to_string(j), r.dual_dims[j], "<=", static_cast<std::int64_t>(j));
  return a;
}

}  // namespace hdeg
