#include "hdeg/invariants.hpp"

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

SubmoduleGens with_relations(const SubmoduleGens& N, const Presentation& M) { return concat(N, M.relations()); }

/// (a_1, ..., a_k) M + R
SubmoduleGens partial(const IdealGens& a, std::size_t k, const Presentation& M) {
  IdealGens head(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  return with_relations(ideal_times(head, M), M);
}

std::int64_t finite_length(const Presentation& M, const char* what) {
  Length l = quotient_length(M);
  if (!l) throw InputError(std::string(what) + " has infinite length");
  return *l;
}

}  // namespace

std::string to_string(Superficial s) {
  switch (s) {
    case Superficial::yes:
      return "yes";
    case Superficial::no:
      return "no";
    case Superficial::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

IdealGens maximal_ideal(const RingPtr& ring) {
  IdealGens m;
  for (int i = 0; i < ring->nvars(); ++i) m.push_back(Polynomial::variable(ring, i));
  return m;
}

std::string ideal_key(const IdealGens& I, const Limits& limits) {
  if (I.empty()) return "()";
  auto F = make_free_module(I.front().ring(), {0});
  auto gb = groebner_basis(ideal_as_submodule(I, F), limits);
  std::string k = "(";
  for (const auto& e : gb.elements()) k += e.component(0).to_string() + ",";
  return k + ")";
}

SubmoduleGens h0_submodule(const Presentation& M, const Limits& limits) {
  return saturate(SubmoduleGens(M.ambient()), maximal_ideal(M.ring()), M, limits);
}

InvariantSession::InvariantSession(Limits limits, SuperficialWindow window) : limits_(limits), window_(window) {}

const LocalCohomologyDuals& InvariantSession::duals(const Presentation& M) {
  const std::string k = M.key();
  auto it = duals_.find(k);
  if (it != duals_.end()) return it->second;
  return duals_.emplace(k, local_cohomology_duals(M, limits_)).first->second;
}

const HilbertCoefficients& InvariantSession::coefficients(const Presentation& M, const IdealGens& I) {
  const std::string k = M.key() + "#" + ideal_key(I, limits_);
  auto it = coeffs_.find(k);
  if (it != coeffs_.end()) return it->second;
  return coeffs_.emplace(k, hilbert_coefficients(M, I, limits_)).first->second;
}

std::int64_t InvariantSession::hdeg(const Presentation& M, const IdealGens& I) {
  if (M.is_zero()) return 0;
  const std::string k = M.key() + "#" + ideal_key(I, limits_);
  auto it = hdeg_.find(k);
  if (it != hdeg_.end()) return it->second;
  const int s = quotient_dimension(M);
  std::int64_t h = 0;
  if (s <= 0) {
    h = finite_length(M, "a module of dimension zero");
  } else {
    h = coefficients(M, I).e[0];
    const LocalCohomologyDuals& L = duals(M);
    // copy: recursion may rehash the memo table
    std::vector<Presentation> mj(L.duals.begin(), L.duals.begin() + s);
    for (int j = 0; j < s; ++j)
      if (!mj[j].is_zero()) h += binomial(s - 1, j) * hdeg(mj[j], I);
  }
  hdeg_.emplace(k, h);
  return h;
}

std::int64_t InvariantSession::torsion(const Presentation& M, const IdealGens& I, int i) {
  const int s = quotient_dimension(M);
  if (s < 2) throw InputError("homological torsion needs dim M >= 2, got " + std::to_string(s));
  if (i < 1 || i > s - 1) throw InputError("torsion index " + std::to_string(i) + " outside 1.." + std::to_string(s - 1));
  std::vector<Presentation> mj = duals(M).duals;
  std::int64_t t = 0;
  for (int j = 1; j <= s - i; ++j)
    if (!mj[j].is_zero()) t += binomial(s - i - 1, j - 1) * hdeg(mj[j], I);
  return t;
}

std::int64_t InvariantSession::h0_length(const Presentation& M) {
  if (M.is_zero()) return 0;
  const std::string k = M.key();
  auto it = h0_.find(k);
  if (it != h0_.end()) return it->second;
  std::int64_t by_saturation = finite_length(submodule_presentation(M, h0_submodule(M, limits_), limits_), "H^0");
  std::int64_t by_ext = finite_length(duals(M).duals[0], "M_0");
  if (by_saturation != by_ext)
    throw EngineError("length of H^0 disagrees: saturation gives " + std::to_string(by_saturation) + ", M_0 gives " +
                      std::to_string(by_ext));
  h0_.emplace(k, by_saturation);
  return by_saturation;
}

bool InvariantSession::is_generalized_cm(const Presentation& M) {
  const LocalCohomologyDuals& L = duals(M);
  for (int j = 0; j < L.dim; ++j)
    if (L.dims[j] > 0) return false;
  return true;
}

std::optional<std::int64_t> InvariantSession::stuckrad_vogel(const Presentation& M) {
  if (!is_generalized_cm(M)) return std::nullopt;
  const LocalCohomologyDuals& L = duals(M);
  std::int64_t v = 0;
  for (int j = 0; j < L.dim; ++j) {
    Length l = quotient_length(L.duals[j]);
    if (!l) throw EngineError("M_j of a generalized Cohen-Macaulay module has infinite length");
    v += binomial(L.dim - 1, j) * *l;
  }
  return v;
}

bool InvariantSession::is_unmixed(const Presentation& M) {
  if (M.is_zero()) throw InputError("unmixedness of the zero module");
  const LocalCohomologyDuals& L = duals(M);
  for (int j = 0; j < L.dim; ++j)
    if (L.dims[j] >= j) return false;
  return true;
}

bool InvariantSession::is_cohen_macaulay(const Presentation& M) {
  const LocalCohomologyDuals& L = duals(M);
  return L.dim != kDimZeroModule && L.depth == L.dim;
}

DSequenceResult InvariantSession::is_d_sequence(const IdealGens& a, const Presentation& M) {
  const std::size_t d = a.size();
  for (std::size_t i = 1; i <= d; ++i) {
    SubmoduleGens base = partial(a, i - 1, M);
    for (std::size_t j = i; j <= d; ++j) {
      auto lhs = groebner_basis(colon_by_element(base, a[i - 1] * a[j - 1], M, limits_), limits_);
      auto rhs = groebner_basis(colon_by_element(base, a[j - 1], M, limits_), limits_);
      if (lhs != rhs) return {false, static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {};
}

Superficial InvariantSession::is_superficial(const Polynomial& a, const Presentation& M, const IdealGens& I) {
  {
    auto F = make_free_module(M.ring(), {0});
    auto gb = groebner_basis(ideal_as_submodule(I, F), limits_);
    if (!gb.contains(FreeElement::from_polynomial(F, 0, a))) throw InputError("the element " + a.to_string() + " is not in the ideal");
  }
  SamuelFunction f(M, I, limits_);
  std::map<int, GroebnerBasis> powers;
  auto power = [&](int k) -> const GroebnerBasis& {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    SubmoduleGens g = k == 0 ? whole_module(M.ambient()) : with_relations(f.power_module(k - 1), M);
    return powers.emplace(k, groebner_basis(g, limits_)).first->second;
  };
  auto identity = [&](int c, int n) {
    SubmoduleGens colon = colon_by_element(power(n + 1).as_gens(), a, M, limits_);
    GroebnerBasis lhs = groebner_basis(intersect(colon, power(c).as_gens(), limits_), limits_);
    return lhs == power(n);
  };
  const SuperficialWindow& w = window_;
  for (int c = w.c_min; c <= w.c_max; ++c) {
    bool ok = true;
    for (int n = c; n <= std::min(c + w.width, w.cap) && ok; ++n) ok = identity(c, n);
    if (ok) return Superficial::yes;
  }
  for (int c = w.c_min; c <= w.c_max; ++c)
    if (identity(c, w.cap)) return Superficial::indeterminate;
  return Superficial::no;
}

DSequenceCoefficients InvariantSession::dseq_coefficients(const IdealGens& a, const Presentation& M) {
  const int d = static_cast<int>(a.size());
  const int s = quotient_dimension(M);
  if (d != s) throw InputError("not a system of parameters: " + std::to_string(d) + " elements for dimension " + std::to_string(s));
  if (d < 1) throw InputError("d-sequence coefficients need dim M >= 1");
  const std::int64_t lq = finite_length(quotient(M, ideal_times(a, M), limits_), "M/QM");
  DSequenceResult ds = is_d_sequence(a, M);
  if (!ds.holds)
    throw InputError("not a d-sequence: the pair (" + std::to_string(ds.i) + "," + std::to_string(ds.j) + ") fails");

  DSequenceCoefficients out;
  for (int k = 0; k < d; ++k) {
    IdealGens head(a.begin(), a.begin() + k);
    out.h0_lengths.push_back(h0_length(quotient(M, ideal_times(head, M), limits_)));
  }
  SubmoduleGens base = partial(a, d - 1, M);
  out.colon_length = finite_length(subquotient(colon_by_element(base, a[d - 1], M, limits_), base, limits_),
                                   "(Q_{d-1}M : a_d) / Q_{d-1}M");
  out.from_lengths.assign(d + 1, 0);
  out.from_lengths[0] = lq - out.colon_length;
  for (int i = 1; i <= d - 1; ++i) {
    std::int64_t v = out.h0_lengths[d - i] - out.h0_lengths[d - i - 1];
    out.from_lengths[i] = i % 2 ? -v : v;
  }
  out.from_lengths[d] = d % 2 ? -out.h0_lengths[0] : out.h0_lengths[0];

  out.fitted = coefficients(M, a);
  if (out.fitted.e != out.from_lengths) throw EngineError("d-sequence coefficient formulas disagree with the fitted Hilbert polynomial");
  return out;
}

std::int64_t InvariantSession::chi1(const IdealGens& Q, const Presentation& M) {
  return euler_char_1(Q, M, coefficients(M, Q).e[0], limits_);
}

InvariantReport InvariantSession::report(const Presentation& M, const IdealGens& I) {
  if (M.is_zero()) throw InputError("the module is zero");
  InvariantReport r;
  const LocalCohomologyDuals& L = duals(M);
  r.dim = L.dim;
  r.depth = L.depth;
  r.dual_dims.assign(L.dims.begin(), L.dims.begin() + r.dim + 1);
  r.e = coefficients(M, I);
  r.length_mod_I = finite_length(quotient(M, ideal_times(I, M), limits_), "M/IM");
  r.hdeg = hdeg(M, I);
  for (int i = 1; i <= r.dim - 1; ++i) r.torsions.push_back(torsion(M, I, i));
  r.h0_length = h0_length(M);
  r.generalized_cm = is_generalized_cm(M);
  r.unmixed = is_unmixed(M);
  r.cohen_macaulay = is_cohen_macaulay(M);
  r.sv_invariant = stuckrad_vogel(M);
  if (r.sv_invariant && *r.sv_invariant != r.hdeg - r.e.e[0])
    throw EngineError("Stuckrad-Vogel invariant differs from hdeg - e0");
  if (static_cast<int>(I.size()) == r.dim) r.chi1 = chi1(I, M);
  return r;
}

std::int64_t hdeg(const Presentation& M, const IdealGens& I, const Limits& limits) { return InvariantSession(limits).hdeg(M, I); }

std::int64_t torsion(const Presentation& M, const IdealGens& I, int i, const Limits& limits) {
  return InvariantSession(limits).torsion(M, I, i);
}

std::int64_t h0_length(const Presentation& M, const Limits& limits) { return InvariantSession(limits).h0_length(M); }

std::optional<std::int64_t> stuckrad_vogel(const Presentation& M, const Limits& limits) {
  return InvariantSession(limits).stuckrad_vogel(M);
}

bool is_generalized_cm(const Presentation& M, const Limits& limits) { return InvariantSession(limits).is_generalized_cm(M); }

bool is_unmixed(const Presentation& M, const Limits& limits) { return InvariantSession(limits).is_unmixed(M); }

DSequenceResult is_d_sequence(const IdealGens& a, const Presentation& M, const Limits& limits) {
  return InvariantSession(limits).is_d_sequence(a, M);
}

Superficial is_superficial(const Polynomial& a, const Presentation& M, const IdealGens& I, const Limits& limits,
                           const SuperficialWindow& window) {
  return InvariantSession(limits, window).is_superficial(a, M, I);
}

DSequenceCoefficients dseq_coefficients(const IdealGens& a, const Presentation& M, const Limits& limits) {
  return InvariantSession(limits).dseq_coefficients(a, M);
}

}  // namespace hdeg
