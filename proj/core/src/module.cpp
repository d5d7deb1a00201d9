#include "hdeg/module.hpp"

#include <algorithm>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

std::vector<int> generator_degrees(const SubmoduleGens& g) {
  std::vector<int> d;
  d.reserve(g.gens.size());
  for (const auto& x : g.gens) d.push_back(x.is_zero() ? 0 : *x.degree());
  return d;
}

SubmoduleGens nonzero(SubmoduleGens g) {
  std::erase_if(g.gens, [](const FreeElement& e) { return e.is_zero(); });
  return g;
}

/// Same coefficients in a free module whose twists differ by a constant.
GroebnerBasis retwisted(const GroebnerBasis& gb, const FreeModulePtr& target) {
  std::vector<FreeElement> out;
  out.reserve(gb.size());
  for (const auto& e : gb.elements()) out.push_back(e.moved_to(target));
  return GroebnerBasis(target, std::move(out));
}

/// Drops basis vector `drop`, renumbering the later ones.
FreeElement without_component(const FreeElement& e, const FreeModulePtr& target, std::uint32_t drop) {
  std::vector<FreeTerm> t;
  t.reserve(e.terms().size());
  for (const auto& x : e.terms()) {
    if (x.comp == drop) throw EngineError("pruning left a term on an eliminated generator");
    FreeTerm y = x;
    if (y.comp > drop) --y.comp;
    t.push_back(std::move(y));
  }
  return FreeElement::from_terms(target, std::move(t));
}

}  // namespace

Presentation::Presentation(FreeModulePtr ambient, std::vector<FreeElement> relations, const Limits& limits)
    : ambient_(std::move(ambient)) {
  SubmoduleGens g(ambient_, std::move(relations));
  g.validate();
  gb_ = std::make_shared<const GroebnerBasis>(groebner_basis(g, limits));
}

Presentation::Presentation(FreeModulePtr ambient, GroebnerBasis relations_gb)
    : ambient_(std::move(ambient)), gb_(std::make_shared<const GroebnerBasis>(std::move(relations_gb))) {
  check_same_ambient(ambient_, gb_->ambient());
}

Presentation Presentation::quotient_ring(const RingPtr& ring, const IdealGens& J, const Limits& limits) {
  auto F = make_free_module(ring, {0});
  return Presentation(F, ideal_as_submodule(J, F).gens, limits);
}

bool Presentation::is_zero() const {
  auto leads = gb_->lead_monomials();
  for (const auto& c : leads)
    if (c.empty() || !c.front().is_one()) return false;
  return true;
}

std::string Presentation::key() const {
  const Ring& R = *ambient_->ring();
  std::string k = R.field().to_string() + "[";
  for (const auto& v : R.names()) k += v + ",";
  k += "]tw";
  for (int t : ambient_->twists()) k += ":" + std::to_string(t);
  k += "|";
  for (const auto& e : gb_->elements()) k += e.to_string() + ";";
  return k;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return *a.ambient_ == *b.ambient_ && *a.gb_ == *b.gb_;
}

GroebnerBasis preimage(const FreeModulePtr& source, const std::vector<FreeElement>& columns, const SubmoduleGens& N,
                       const Limits& limits) {
  if (static_cast<int>(columns.size()) != source->rank()) throw InputError("column count does not match source rank");
  const FreeModulePtr& target = N.ambient;
  const int rt = target->rank();
  std::vector<int> twists = target->twists();
  twists.insert(twists.end(), source->twists().begin(), source->twists().end());
  std::vector<int> blocks(rt, 1);
  blocks.resize(twists.size(), 0);
  auto E = make_free_module(source->ring(), std::move(twists), std::move(blocks));

  SubmoduleGens g(E);
  for (int j = 0; j < source->rank(); ++j) {
    const FreeElement& c = columns[j];
    check_same_ambient(c.ambient(), target);
    if (!c.is_zero() && c.degree() != source->twist(j))
      throw InputError("map column " + std::to_string(j) + " has the wrong degree");
    std::vector<FreeTerm> t;
    for (const auto& x : c.terms()) t.push_back(x);
    FreeTerm e;
    e.mon = Monomial(source->ring()->nvars());
    e.comp = static_cast<std::uint32_t>(rt + j);
    e.coef = source->ring()->field().one();
    t.push_back(e);
    g.gens.push_back(FreeElement::from_terms(E, std::move(t)));
  }
  for (const auto& n : N.gens)
    if (!n.is_zero()) g.gens.push_back(n.moved_to(E));
  g.validate();

  GroebnerBasis gb = groebner_basis(g, limits);
  std::vector<FreeElement> kernel;
  for (const auto& e : gb.elements())
    if (static_cast<int>(e.lead().comp) >= rt) kernel.push_back(e.moved_to(source, -rt));
  return GroebnerBasis(source, std::move(kernel));
}

SubmoduleGens syzygies(const SubmoduleGens& g, const Limits& limits) {
  g.validate();
  auto source = make_free_module(g.ambient->ring(), generator_degrees(g));
  GroebnerBasis k = preimage(source, g.gens, SubmoduleGens(g.ambient), limits);
  return minimal_generators(k.as_gens(), limits);
}

SubmoduleGens colon_by_element(const SubmoduleGens& N, const Polynomial& f, const Presentation& M, const Limits& limits) {
  check_same_ambient(N.ambient, M.ambient());
  N.validate();
  const FreeModulePtr& F = M.ambient();
  if (f.is_zero()) return whole_module(F);
  if (!f.is_homogeneous()) throw InputError("graded surrogate requires homogeneous data: " + f.to_string());
  const int d = *f.degree();
  std::vector<int> tw = F->twists();
  for (int& t : tw) t += d;
  auto shifted = make_free_module(F->ring(), std::move(tw));
  std::vector<FreeElement> cols;
  for (int i = 0; i < F->rank(); ++i) cols.push_back(FreeElement::from_polynomial(F, i, f));
  GroebnerBasis k = preimage(shifted, cols, concat(N, M.relations()), limits);
  return retwisted(k, F).as_gens();
}

SubmoduleGens colon_by_ideal(const SubmoduleGens& N, const IdealGens& J, const Presentation& M, const Limits& limits) {
  if (J.empty()) throw InputError("colon by an ideal with no generators");
  SubmoduleGens acc = colon_by_element(N, J.front(), M, limits);
  for (std::size_t k = 1; k < J.size(); ++k) acc = intersect(acc, colon_by_element(N, J[k], M, limits), limits);
  return acc;
}

namespace {

IdealGens as_ideal(const SubmoduleGens& J) {
  if (!J.ambient || J.ambient->rank() != 1) throw InputError("expected an ideal (rank-one submodule)");
  IdealGens out;
  for (const auto& g : J.gens) out.push_back(g.component(0));
  return out;
}

}  // namespace

SubmoduleGens colon_by_ideal(const SubmoduleGens& N, const SubmoduleGens& J, const Presentation& M, const Limits& limits) {
  return colon_by_ideal(N, as_ideal(J), M, limits);
}

SubmoduleGens saturate(const SubmoduleGens& N, const IdealGens& J, const Presentation& M, const Limits& limits) {
  GroebnerBasis cur = groebner_basis(concat(N, M.relations()), limits);
  for (;;) {
    GroebnerBasis next = groebner_basis(colon_by_ideal(cur.as_gens(), J, M, limits), limits);
    if (next == cur) return cur.as_gens();
    cur = std::move(next);
  }
}

SubmoduleGens saturate(const SubmoduleGens& N, const SubmoduleGens& J, const Presentation& M, const Limits& limits) {
  return saturate(N, as_ideal(J), M, limits);
}

SubmoduleGens intersect(const SubmoduleGens& N1, const SubmoduleGens& N2, const Limits& limits) {
  check_same_ambient(N1.ambient, N2.ambient);
  SubmoduleGens a = nonzero(N1);
  a.validate();
  N2.validate();
  auto source = make_free_module(a.ambient->ring(), generator_degrees(a));
  GroebnerBasis k = preimage(source, a.gens, N2, limits);
  SubmoduleGens image(a.ambient);
  for (const auto& u : k.elements()) {
    FreeElement v(a.ambient);
    for (std::size_t j = 0; j < a.gens.size(); ++j) {
      Polynomial c = u.component(static_cast<int>(j));
      if (!c.is_zero()) v = v + a.gens[j].times(c);
    }
    if (!v.is_zero()) image.gens.push_back(std::move(v));
  }
  return groebner_basis(image, limits).as_gens();
}

Length quotient_length(const Presentation& M) {
  const int n = M.ring()->nvars();
  std::int64_t total = 0;
  for (const auto& leads : M.relations_gb().lead_monomials()) {
    auto c = monideal::count_standard(leads, n);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

int quotient_dimension(const Presentation& M) {
  const int n = M.ring()->nvars();
  int d = kDimZeroModule;
  for (const auto& leads : M.relations_gb().lead_monomials()) d = std::max(d, monideal::dimension(leads, n));
  return d;
}

Presentation quotient(const Presentation& M, const SubmoduleGens& N, const Limits& limits) {
  check_same_ambient(N.ambient, M.ambient());
  return Presentation(M.ambient(), concat(M.relations(), N).gens, limits);
}

Presentation subquotient(const SubmoduleGens& K, const SubmoduleGens& D, const Limits& limits) {
  check_same_ambient(K.ambient, D.ambient);
  SubmoduleGens k = nonzero(K);
  k.validate();
  auto source = make_free_module(k.ambient->ring(), generator_degrees(k));
  return Presentation(source, preimage(source, k.gens, D, limits));
}

Presentation submodule_presentation(const Presentation& M, const SubmoduleGens& N, const Limits& limits) {
  check_same_ambient(N.ambient, M.ambient());
  return subquotient(N, M.relations(), limits);
}

Presentation prune(const Presentation& M, const Limits& limits) {
  FreeModulePtr amb = M.ambient();
  std::vector<FreeElement> rels = M.relations_gb().elements();
  for (;;) {
    rels = minimal_generators(SubmoduleGens(amb, rels), limits).gens;
    std::size_t pick = rels.size();
    std::uint32_t comp = 0;
    Scalar unit;
    for (std::size_t r = 0; r < rels.size() && pick == rels.size(); ++r)
      for (const auto& t : rels[r].terms())
        if (t.mon.is_one()) {
          pick = r;
          comp = t.comp;
          unit = t.coef;
          break;
        }
    if (pick == rels.size()) break;

    const FreeElement pivot = rels[pick].times(unit.inverse(), Monomial(amb->ring()->nvars()));
    std::vector<int> tw = amb->twists();
    tw.erase(tw.begin() + comp);
    auto next = make_free_module(amb->ring(), std::move(tw));
    std::vector<FreeElement> out;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (r == pick) continue;
      Polynomial c = rels[r].component(static_cast<int>(comp));
      FreeElement e = c.is_zero() ? rels[r] : rels[r] - pivot.times(c);
      if (!e.is_zero()) out.push_back(without_component(e, next, comp));
    }
    amb = next;
    rels = std::move(out);
  }
  return Presentation(amb, rels, limits);
}

SubmoduleGens ideal_times(const IdealGens& I, const Presentation& M) { return ideal_times_module(I, M.ambient()); }

IdealGens annihilator(const Presentation& M, const Limits& limits) {
  auto S = make_free_module(M.ring(), {0});
  SubmoduleGens acc = whole_module(S);
  for (int i = 0; i < M.rank(); ++i) {
    auto src = make_free_module(M.ring(), {M.ambient()->twist(i)});
    GroebnerBasis k = preimage(src, {FreeElement::basis(M.ambient(), i)}, M.relations(), limits);
    SubmoduleGens part = retwisted(k, S).as_gens();
    acc = i == 0 ? part : intersect(acc, part, limits);
  }
  return as_ideal(groebner_basis(acc, limits).as_gens());
}

bool annihilates(const IdealGens& I, const Presentation& M) {
  for (const auto& f : I)
    for (int i = 0; i < M.rank(); ++i)
      if (!M.relations_gb().contains(FreeElement::from_polynomial(M.ambient(), i, f))) return false;
  return true;
}

}  // namespace hdeg
