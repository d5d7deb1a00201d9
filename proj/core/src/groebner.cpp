#include "hdeg/groebner.hpp"

#include <algorithm>
#include <map>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = m[i];
    if (e >= 1) mask |= 1u << (2 * i);
    if (e >= 2) mask |= 1u << (2 * i + 1);
  }
  return mask;
}

int true_degree(const FreeModule& amb, const FreeTerm& t) { return amb.twist(static_cast<int>(t.comp)) + t.mon.degree(); }

struct Element {
  std::vector<FreeTerm> terms;
  std::uint32_t mask = 0;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
};

class Engine {
 public:
  Engine(const SubmoduleGens& g, const GroebnerOptions& opts) : input_(g), opts_(opts), amb_(g.ambient) {
    by_comp_.resize(amb_->rank());
    ideal_case_ = amb_->rank() == 1;
    std_.resize(amb_->rank());
    std_deg_.assign(amb_->rank(), -1);
  }

  GroebnerResult run();

 private:
  long find_reducer(const FreeTerm& t) const {
    const std::uint32_t m = divmask(t.mon);
    for (std::size_t k : by_comp_[t.comp]) {
      const Element& e = basis_[k];
      if ((e.mask & ~m) == 0 && e.terms.front().mon.divides(t.mon)) return static_cast<long>(k);
    }
    return -1;
  }

  void reduce(std::vector<FreeTerm>& f, std::size_t start) const {
    std::vector<FreeTerm> rem;
    rem.reserve(f.size());
    for (std::size_t i = 0; i < start && i < f.size(); ++i) rem.push_back(f[i]);
    std::size_t pos = start;
    while (pos < f.size()) {
      long r = find_reducer(f[pos]);
      if (r < 0) {
        rem.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      const auto& g = basis_[static_cast<std::size_t>(r)].terms;
      Monomial q = f[pos].mon / g.front().mon;
      Scalar c = -f[pos].coef;
      detail::add_scaled(f, pos, c, q, g);
      pos = 0;
    }
    f = std::move(rem);
  }

  void insert(std::vector<FreeTerm> f);
  bool finite_at(int d);

  const SubmoduleGens& input_;
  GroebnerOptions opts_;
  FreeModulePtr amb_;
  bool ideal_case_ = false;
  std::vector<Element> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::map<int, std::vector<Pair>> pairs_;
  std::vector<std::vector<Monomial>> std_;
  std::vector<int> std_deg_;
};

void Engine::insert(std::vector<FreeTerm> f) {
  if (!f.front().coef.is_one()) {
    Scalar inv = f.front().coef.inverse();
    for (auto& t : f) t.coef *= inv;
  }
  const std::size_t h = basis_.size();
  const FreeTerm lh = f.front();
  const std::uint32_t comp = lh.comp;

  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool disjoint;
  };
  std::vector<Cand> cands;
  for (std::size_t g : by_comp_[comp]) {
    if (!basis_[g].active) continue;
    const Monomial& lg = basis_[g].terms.front().mon;
    cands.push_back({g, lcm(lh.mon, lg), ideal_case_ && coprime(lh.mon, lg)});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.lcm.degree() < b.lcm.degree(); });
  std::vector<char> kept(cands.size(), 0);
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (cands[k].disjoint) {
      kept[k] = 1;
      continue;
    }
    bool dominated = false;
    for (std::size_t k2 = 0; k2 < cands.size() && !dominated; ++k2) {
      if (k2 == k) continue;
      if (cands[k2].lcm.degree() > cands[k].lcm.degree()) break;
      if (k2 < k && !kept[k2]) continue;
      if (cands[k2].lcm.divides(cands[k].lcm)) dominated = true;
    }
    kept[k] = dominated ? 0 : 1;
  }

  for (auto& [deg, vec] : pairs_) {
    std::erase_if(vec, [&](const Pair& p) {
      if (p.comp != comp || !lh.mon.divides(p.lcm)) return false;
      Monomial li = lcm(basis_[p.i].terms.front().mon, lh.mon);
      Monomial lj = lcm(basis_[p.j].terms.front().mon, lh.mon);
      return li != p.lcm && lj != p.lcm;
    });
  }
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (!kept[k] || cands[k].disjoint) continue;
    int deg = amb_->twist(static_cast<int>(comp)) + cands[k].lcm.degree();
    pairs_[deg].push_back({cands[k].g, h, cands[k].lcm, comp});
  }

  for (std::size_t g : by_comp_[comp])
    if (basis_[g].active && lh.mon.divides(basis_[g].terms.front().mon)) basis_[g].active = false;

  Element e;
  e.mask = divmask(lh.mon);
  e.terms = std::move(f);
  basis_.push_back(std::move(e));
  by_comp_[comp].push_back(h);
}

bool Engine::finite_at(int d) {
  const int nv = amb_->ring()->nvars();
  bool all_empty = true;
  for (int c = 0; c < amb_->rank(); ++c) {
    int e = d - amb_->twist(c);
    if (e < 0) return false;
    while (std_deg_[c] < e) {
      std::vector<Monomial> next;
      if (std_deg_[c] < 0) {
        next.push_back(Monomial(nv));
      } else {
        for (const auto& m : std_[c]) {
          int last = 0;
          for (int v = nv - 1; v >= 0; --v)
            if (m[v]) {
              last = v;
              break;
            }
          for (int v = last; v < nv; ++v) next.push_back(m * Monomial::variable(nv, v));
        }
      }
      std::vector<Monomial> kept;
      for (const auto& m : next) {
        FreeTerm t;
        t.mon = m;
        t.comp = static_cast<std::uint32_t>(c);
        if (find_reducer(t) < 0) kept.push_back(m);
      }
      std_[c] = std::move(kept);
      ++std_deg_[c];
    }
    if (!std_[c].empty()) all_empty = false;
  }
  return all_empty;
}

GroebnerResult Engine::run() {
  input_.validate();
  const std::size_t ngens = input_.gens.size();
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t k = 0; k < ngens; ++k)
    if (!input_.gens[k].is_zero()) order.push_back({*input_.gens[k].degree(), k});
  std::stable_sort(order.begin(), order.end());

  std::vector<std::size_t> minimal;
  std::size_t next_input = 0;
  while (true) {
    while (!pairs_.empty() && pairs_.begin()->second.empty()) pairs_.erase(pairs_.begin());
    std::optional<int> d;
    if (!pairs_.empty()) d = pairs_.begin()->first;
    if (next_input < order.size() && (!d || order[next_input].first < *d)) d = order[next_input].first;
    if (!d) break;
    if (*d > opts_.limits.degree_cap)
      throw CapExceeded("degree cap " + std::to_string(opts_.limits.degree_cap) + " exceeded (Groebner basis needs degree " +
                        std::to_string(*d) + ")");

    auto it = pairs_.find(*d);
    if (it != pairs_.end()) {
      std::vector<Pair> batch = std::move(it->second);
      pairs_.erase(it);
      std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
        int c = revlex_compare(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.comp != b.comp) return a.comp > b.comp;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      for (const Pair& p : batch) {
        const auto& fi = basis_[p.i].terms;
        const auto& fj = basis_[p.j].terms;
        std::vector<FreeTerm> s;
        detail::add_scaled(s, 0, amb_->ring()->field().one(), p.lcm / fi.front().mon, fi);
        detail::add_scaled(s, 0, -amb_->ring()->field().one(), p.lcm / fj.front().mon, fj);
        reduce(s, 0);
        if (!s.empty()) insert(std::move(s));
      }
    }
    while (next_input < order.size() && order[next_input].first == *d) {
      std::size_t k = order[next_input++].second;
      std::vector<FreeTerm> f = input_.gens[k].terms();
      reduce(f, 0);
      if (!f.empty()) {
        minimal.push_back(k);
        insert(std::move(f));
      }
    }
    if (opts_.stop_when_finite && finite_at(*d)) break;
  }

  // Interreduce: keep minimal leads, tail-reduce, sort ascending.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const FreeTerm& lk = basis_[k].terms.front();
    bool redundant = false;
    for (std::size_t g : by_comp_[lk.comp]) {
      if (g == k) continue;
      const Monomial& lg = basis_[g].terms.front().mon;
      if (lg.divides(lk.mon) && (lg != lk.mon || g < k)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(k);
  }
  std::vector<std::vector<std::size_t>> reducers(amb_->rank());
  for (std::size_t k : keep) reducers[basis_[k].terms.front().comp].push_back(k);
  by_comp_ = reducers;
  std::vector<FreeElement> out;
  out.reserve(keep.size());
  for (std::size_t k : keep) {
    std::vector<FreeTerm> f = basis_[k].terms;
    reduce(f, 1);
    out.push_back(FreeElement::from_sorted(amb_, std::move(f)));
  }
  std::sort(out.begin(), out.end(), [](const FreeElement& a, const FreeElement& b) { return term_compare(a.lead(), b.lead()) < 0; });
  std::sort(minimal.begin(), minimal.end());
  return {GroebnerBasis(amb_, std::move(out)), std::move(minimal)};
}

}  // namespace

SubmoduleGens::SubmoduleGens(FreeModulePtr amb, std::vector<FreeElement> g) : ambient(std::move(amb)), gens(std::move(g)) {}

void SubmoduleGens::validate() const {
  if (!ambient) throw InputError("submodule without ambient free module");
  for (const auto& g : gens) {
    check_same_ambient(ambient, g.ambient());
    if (!g.is_homogeneous()) throw InputError("graded surrogate requires homogeneous data: " + g.to_string());
  }
}

SubmoduleGens whole_module(const FreeModulePtr& ambient) {
  SubmoduleGens s(ambient);
  for (int i = 0; i < ambient->rank(); ++i) s.gens.push_back(FreeElement::basis(ambient, i));
  return s;
}

SubmoduleGens ideal_times_module(const IdealGens& ideal, const FreeModulePtr& ambient) {
  SubmoduleGens s(ambient);
  for (const auto& p : ideal) {
    if (!p.is_homogeneous()) throw InputError("graded surrogate requires homogeneous data: " + p.to_string());
    for (int i = 0; i < ambient->rank(); ++i)
      if (!p.is_zero()) s.gens.push_back(FreeElement::from_polynomial(ambient, i, p));
  }
  return s;
}

SubmoduleGens ideal_as_submodule(const IdealGens& ideal, const FreeModulePtr& rank_one) {
  if (rank_one->rank() != 1) throw InputError("ideal needs a rank-one ambient");
  return ideal_times_module(ideal, rank_one);
}

SubmoduleGens concat(const SubmoduleGens& a, const SubmoduleGens& b) {
  check_same_ambient(a.ambient, b.ambient);
  SubmoduleGens s = a;
  s.gens.insert(s.gens.end(), b.gens.begin(), b.gens.end());
  return s;
}

GroebnerBasis::GroebnerBasis(FreeModulePtr ambient, std::vector<FreeElement> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
  by_comp_.resize(ambient_->rank());
  masks_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    by_comp_[elements_[k].lead().comp].push_back(k);
    masks_.push_back(divmask(elements_[k].lead().mon));
  }
}

FreeElement GroebnerBasis::normal_form(const FreeElement& f) const {
  check_same_ambient(ambient_, f.ambient());
  std::vector<FreeTerm> g = f.terms();
  std::vector<FreeTerm> rem;
  std::size_t pos = 0;
  while (pos < g.size()) {
    const FreeTerm& t = g[pos];
    const std::uint32_t m = divmask(t.mon);
    long r = -1;
    for (std::size_t k : by_comp_[t.comp])
      if ((masks_[k] & ~m) == 0 && elements_[k].lead().mon.divides(t.mon)) {
        r = static_cast<long>(k);
        break;
      }
    if (r < 0) {
      rem.push_back(std::move(g[pos]));
      ++pos;
      continue;
    }
    const auto& e = elements_[static_cast<std::size_t>(r)].terms();
    Monomial q = t.mon / e.front().mon;
    Scalar c = -t.coef / e.front().coef;
    detail::add_scaled(g, pos, c, q, e);
    pos = 0;
  }
  return FreeElement::from_sorted(ambient_, std::move(rem));
}

bool GroebnerBasis::contains(const GroebnerBasis& other) const {
  for (const auto& e : other.elements())
    if (!contains(e)) return false;
  return true;
}

std::vector<std::vector<Monomial>> GroebnerBasis::lead_monomials() const {
  std::vector<std::vector<Monomial>> out(ambient_->rank());
  for (const auto& e : elements_) out[e.lead().comp].push_back(e.lead().mon);
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(*a.ambient_ == *b.ambient_) || a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t k = 0; k < a.elements_.size(); ++k)
    if (a.elements_[k] != b.elements_[k]) return false;
  return true;
}

GroebnerResult groebner_compute(const SubmoduleGens& g, const GroebnerOptions& opts) {
  Engine e(g, opts);
  return e.run();
}

GroebnerBasis groebner_basis(const SubmoduleGens& g, const Limits& limits) {
  GroebnerOptions o;
  o.limits = limits;
  return groebner_compute(g, o).basis;
}

FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

SubmoduleGens minimal_generators(const SubmoduleGens& g, const Limits& limits) {
  GroebnerOptions o;
  o.limits = limits;
  auto res = groebner_compute(g, o);
  SubmoduleGens out(g.ambient);
  for (std::size_t k : res.minimal) out.gens.push_back(g.gens[k]);
  return out;
}

}  // namespace hdeg
