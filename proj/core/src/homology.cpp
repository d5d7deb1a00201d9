#include "hdeg/homology.hpp"

#include <algorithm>
#include <bit>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

FreeModulePtr dual_module(const FreeModulePtr& F) {
  std::vector<int> tw = F->twists();
  for (int& t : tw) t = -t;
  return make_free_module(F->ring(), std::move(tw));
}

/// Columns of the transpose of f, as a map target^* -> source^*.
std::vector<FreeElement> transpose(const GradedMap& f, const FreeModulePtr& target_dual, const FreeModulePtr& source_dual) {
  std::vector<std::vector<FreeTerm>> cols(target_dual->rank());
  for (std::size_t k = 0; k < f.columns.size(); ++k)
    for (const auto& t : f.columns[k].terms()) {
      FreeTerm u = t;
      u.comp = static_cast<std::uint32_t>(k);
      cols[t.comp].push_back(std::move(u));
    }
  std::vector<FreeElement> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.push_back(FreeElement::from_terms(source_dual, std::move(c)));
  return out;
}

Presentation zero_presentation(const RingPtr& ring) {
  auto F = make_free_module(ring, {});
  return Presentation(F, GroebnerBasis(F, {}));
}

std::vector<std::uint32_t> subsets_of_size(int p, int i) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << p); ++s)
    if (std::popcount(s) == i) out.push_back(s);
  return out;
}

/// Koszul complex K(a) (x) M in one homological degree: free module layout
/// and the relations R tensored in.
struct KoszulLevel {
  std::vector<std::uint32_t> subsets;
  FreeModulePtr module;
  SubmoduleGens relations;

  int index(std::size_t subset_pos, int comp, int rank) const { return static_cast<int>(subset_pos) * rank + comp; }
};

}  // namespace

FreeElement GradedMap::apply(const FreeElement& u) const {
  check_same_ambient(u.ambient(), source);
  FreeElement v(target);
  for (int j = 0; j < source->rank(); ++j) {
    Polynomial c = u.component(j);
    if (!c.is_zero()) v = v + columns[j].times(c);
  }
  return v;
}

GradedMap compose(const GradedMap& outer, const GradedMap& inner) {
  check_same_ambient(inner.target, outer.source);
  GradedMap r{inner.source, outer.target, {}};
  for (const auto& c : inner.columns) r.columns.push_back(outer.apply(c));
  return r;
}

bool is_zero_map(const GradedMap& f) {
  for (const auto& c : f.columns)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<int> FreeComplex::ranks() const {
  std::vector<int> r;
  for (const auto& m : modules) r.push_back(m->rank());
  return r;
}

bool FreeComplex::is_complex() const {
  for (std::size_t i = 1; i < maps.size(); ++i)
    if (!is_zero_map(compose(maps[i - 1], maps[i]))) return false;
  return true;
}

FreeComplex free_resolution(const Presentation& M, int up_to, const Limits& limits) {
  Presentation P = prune(M, limits);
  FreeComplex C;
  C.modules.push_back(P.ambient());
  SubmoduleGens cols = minimal_generators(P.relations(), limits);
  for (int i = 1; i <= up_to && !cols.gens.empty(); ++i) {
    std::vector<int> tw;
    for (const auto& c : cols.gens) tw.push_back(*c.degree());
    auto Fi = make_free_module(P.ring(), std::move(tw));
    C.modules.push_back(Fi);
    C.maps.push_back(GradedMap{Fi, C.modules[i - 1], cols.gens});
    SubmoduleGens syz = syzygies(cols, limits);
    cols = SubmoduleGens(Fi);
    for (const auto& s : syz.gens) cols.gens.push_back(s.moved_to(Fi));
  }
  return C;
}

std::vector<Presentation> ext_modules(const Presentation& M, const Limits& limits) {
  const int n = M.ring()->nvars();
  FreeComplex C = free_resolution(M, n + 1, limits);
  if (C.length() > n) throw EngineError("free resolution longer than the number of variables");
  const int p = C.length();
  std::vector<FreeModulePtr> duals;
  for (const auto& F : C.modules) duals.push_back(dual_module(F));

  std::vector<Presentation> out;
  for (int i = 0; i <= n; ++i) {
    if (i > p) {
      out.push_back(zero_presentation(M.ring()));
      continue;
    }
    SubmoduleGens K(duals[i]);
    if (i == p) {
      K = whole_module(duals[i]);
    } else {
      auto cols = transpose(C.maps[i], duals[i], duals[i + 1]);
      K = preimage(duals[i], cols, SubmoduleGens(duals[i + 1]), limits).as_gens();
    }
    SubmoduleGens D(duals[i]);
    if (i > 0) D.gens = transpose(C.maps[i - 1], duals[i - 1], duals[i]);
    out.push_back(prune(subquotient(K, D, limits), limits));
  }
  return out;
}

LocalCohomologyDuals local_cohomology_duals(const Presentation& M, const Limits& limits) {
  LocalCohomologyDuals L;
  L.n = M.ring()->nvars();
  L.dim = quotient_dimension(M);
  auto ext = ext_modules(M, limits);
  for (int j = 0; j <= L.n; ++j) {
    L.duals.push_back(ext[L.n - j]);
    int d = quotient_dimension(L.duals.back());
    L.dims.push_back(d);
    if (d > j) throw EngineError("dual of local cohomology M_" + std::to_string(j) + " has dimension " + std::to_string(d));
    if (d != kDimZeroModule && j > L.dim)
      throw EngineError("M_" + std::to_string(j) + " is nonzero above the dimension of the module");
    if (d != kDimZeroModule && L.depth == kDepthZeroModule) L.depth = j;
  }
  if (L.dim >= 0 && L.dims[L.dim] != L.dim) throw EngineError("top dual M_s does not have dimension s");
  return L;
}

std::vector<std::int64_t> koszul_homology_lengths(const IdealGens& a, const Presentation& M, const Limits& limits) {
  for (const auto& f : a)
    if (!f.is_homogeneous() || f.is_zero()) throw InputError("graded surrogate requires homogeneous data: " + f.to_string());
  const int p = static_cast<int>(a.size());
  if (p > 16) throw InputError("too many Koszul generators");
  {
    int d = quotient_dimension(quotient(M, ideal_times(a, M), limits));
    if (d > 0) throw InputError("not a system of parameters: dim M/(a)M = " + std::to_string(d));
  }
  const int r = M.rank();
  const FreeModulePtr& F = M.ambient();

  std::vector<KoszulLevel> lv(p + 1);
  for (int i = 0; i <= p; ++i) {
    lv[i].subsets = subsets_of_size(p, i);
    std::vector<int> tw;
    for (auto s : lv[i].subsets) {
      int shift = 0;
      for (int t = 0; t < p; ++t)
        if (s >> t & 1) shift += *a[t].degree();
      for (int c = 0; c < r; ++c) tw.push_back(F->twist(c) + shift);
    }
    lv[i].module = make_free_module(M.ring(), std::move(tw));
    lv[i].relations = SubmoduleGens(lv[i].module);
    for (std::size_t k = 0; k < lv[i].subsets.size(); ++k)
      for (const auto& g : M.relations_gb().elements())
        lv[i].relations.gens.push_back(g.moved_to(lv[i].module, lv[i].index(k, 0, r)));
  }
  // d_i on the basis of level i
  auto differential = [&](int i) {
    std::vector<FreeElement> cols;
    const auto& tgt = lv[i - 1];
    for (auto s : lv[i].subsets)
      for (int c = 0; c < r; ++c) {
        FreeElement v(tgt.module);
        int sign = 0;
        for (int t = 0; t < p; ++t) {
          if (!(s >> t & 1)) continue;
          std::uint32_t rest = s & ~(1u << t);
          std::size_t pos = static_cast<std::size_t>(
              std::lower_bound(tgt.subsets.begin(), tgt.subsets.end(), rest) - tgt.subsets.begin());
          Polynomial coef = sign % 2 ? -a[t] : a[t];
          v = v + FreeElement::from_polynomial(tgt.module, tgt.index(pos, c, r), coef);
          ++sign;
        }
        cols.push_back(std::move(v));
      }
    return cols;
  };

  std::vector<std::int64_t> out;
  std::vector<FreeElement> next_cols;  // d_{i+1}
  for (int i = p; i >= 1; --i) {
    auto cols = differential(i);
    SubmoduleGens Z = preimage(lv[i].module, cols, lv[i - 1].relations, limits).as_gens();
    SubmoduleGens B = lv[i].relations;
    B.gens.insert(B.gens.end(), next_cols.begin(), next_cols.end());
    Length len = quotient_length(subquotient(Z, B, limits));
    if (!len) throw EngineError("Koszul homology of a system of parameters has infinite length");
    out.push_back(*len);
    next_cols = std::move(cols);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t euler_char_1(const IdealGens& Q, const Presentation& M, std::int64_t e0, const Limits& limits) {
  const int s = quotient_dimension(M);
  if (static_cast<int>(Q.size()) != s) throw InputError("not a parameter ideal: " + std::to_string(Q.size()) + " generators for a module of dimension " + std::to_string(s));
  auto h = koszul_homology_lengths(Q, M, limits);
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += i % 2 ? -h[i] : h[i];
  Length l0 = quotient_length(quotient(M, ideal_times(Q, M), limits));
  if (!l0) throw InputError("not a parameter ideal: M/QM has infinite length");
  if (chi != *l0 - e0)
    throw EngineError("first Euler characteristic mismatch: Koszul homology gives " + std::to_string(chi) +
                      ", l(M/QM) - e0 gives " + std::to_string(*l0 - e0));
  if (chi < 0) throw EngineError("negative first Euler characteristic");
  return chi;
}

std::int64_t euler_char_1(const IdealGens& Q, const Presentation& M, const Limits& limits) {
  return euler_char_1(Q, M, multiplicity(M, Q, limits), limits);
}

}  // namespace hdeg
