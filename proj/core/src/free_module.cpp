#include "hdeg/free_module.hpp"

#include <algorithm>

#include "hdeg/error.hpp"

namespace hdeg {

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists, std::vector<int> blocks)
    : ring_(std::move(ring)), twists_(std::move(twists)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) blocks_.assign(twists_.size(), 0);
  if (blocks_.size() != twists_.size()) throw InputError("block list does not match module rank");
}

FreeModulePtr make_free_module(RingPtr ring, std::vector<int> twists, std::vector<int> blocks) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(twists), std::move(blocks));
}

void check_same_ambient(const FreeModulePtr& a, const FreeModulePtr& b) {
  if (a != b && !(*a == *b)) throw InputError("free module (ambient) mismatch");
}

FreeElement::FreeElement(FreeModulePtr ambient) : ambient_(std::move(ambient)) {}

FreeElement FreeElement::basis(FreeModulePtr ambient, int i) {
  if (i < 0 || i >= ambient->rank()) throw InputError("basis index out of range");
  FreeTerm t;
  t.mon = Monomial(ambient->ring()->nvars());
  t.comp = static_cast<std::uint32_t>(i);
  t.weight = ambient->weight(i, t.mon);
  t.coef = ambient->ring()->field().one();
  FreeElement e(std::move(ambient));
  e.terms_.push_back(std::move(t));
  return e;
}

FreeElement FreeElement::from_polynomial(FreeModulePtr ambient, int i, const Polynomial& p) {
  if (i < 0 || i >= ambient->rank()) throw InputError("basis index out of range");
  check_same_ring(ambient->ring(), p.ring());
  std::vector<FreeTerm> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms())
    terms.push_back({t.mon, static_cast<std::uint32_t>(i), ambient->weight(i, t.mon), t.coef});
  return from_sorted(std::move(ambient), std::move(terms));
}

FreeElement FreeElement::from_terms(FreeModulePtr ambient, std::vector<FreeTerm> terms) {
  for (auto& t : terms) {
    if (t.comp >= static_cast<std::uint32_t>(ambient->rank())) throw InputError("component index out of range");
    t.weight = ambient->weight(static_cast<int>(t.comp), t.mon);
  }
  std::sort(terms.begin(), terms.end(), [](const FreeTerm& a, const FreeTerm& b) { return term_compare(a, b) > 0; });
  std::vector<FreeTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && term_compare(out.back(), t) == 0) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return from_sorted(std::move(ambient), std::move(out));
}

FreeElement FreeElement::from_sorted(FreeModulePtr ambient, std::vector<FreeTerm> terms) {
  FreeElement e(std::move(ambient));
  e.terms_ = std::move(terms);
  return e;
}

Polynomial FreeElement::component(int i) const {
  std::vector<Polynomial::Term> t;
  for (const auto& x : terms_)
    if (static_cast<int>(x.comp) == i) t.push_back({x.mon, x.coef});
  return Polynomial::from_terms(ambient_->ring(), std::move(t));
}

bool FreeElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto deg = [&](const FreeTerm& t) { return ambient_->twist(static_cast<int>(t.comp)) + t.mon.degree(); };
  int d = deg(terms_.front());
  for (const auto& t : terms_)
    if (deg(t) != d) return false;
  return true;
}

std::optional<int> FreeElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ambient_->twist(static_cast<int>(terms_.front().comp)) + terms_.front().mon.degree();
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  check_same_ambient(a.ambient_, b.ambient_);
  std::vector<FreeTerm> f = a.terms_;
  detail::add_scaled(f, 0, a.ambient_->ring()->field().one(), Monomial(a.ambient_->ring()->nvars()), b.terms_);
  return FreeElement::from_sorted(a.ambient_, std::move(f));
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) { return a + (-b); }

FreeElement FreeElement::times(const Scalar& c, const Monomial& m) const {
  std::vector<FreeTerm> f;
  detail::add_scaled(f, 0, c, m, terms_);
  return from_sorted(ambient_, std::move(f));
}

FreeElement FreeElement::times(const Polynomial& p) const {
  check_same_ring(ambient_->ring(), p.ring());
  std::vector<FreeTerm> f;
  for (const auto& t : p.terms()) detail::add_scaled(f, 0, t.coef, t.mon, terms_);
  return from_sorted(ambient_, std::move(f));
}

FreeElement FreeElement::monic() const {
  if (terms_.empty() || terms_.front().coef.is_one()) return *this;
  Scalar inv = terms_.front().coef.inverse();
  FreeElement r = *this;
  for (auto& t : r.terms_) t.coef *= inv;
  return r;
}

FreeElement FreeElement::moved_to(const FreeModulePtr& target, int offset) const {
  check_same_ring(ambient_->ring(), target->ring());
  std::vector<FreeTerm> t = terms_;
  for (auto& x : t) x.comp = static_cast<std::uint32_t>(static_cast<int>(x.comp) + offset);
  return from_terms(target, std::move(t));
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.comp != t.comp || s.mon != t.mon || s.coef != t.coef) return false;
  }
  return true;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s = "[";
  for (int i = 0; i < ambient_->rank(); ++i) {
    if (i) s += ", ";
    s += component(i).to_string();
  }
  return s + "]";
}

FreeElement free_element_scale_add(const FreeElement& u, const Scalar& c, const Monomial& m, const FreeElement& v) {
  check_same_ambient(u.ambient(), v.ambient());
  std::vector<FreeTerm> f = u.terms();
  if (!c.is_zero()) detail::add_scaled(f, 0, c, m, v.terms());
  return FreeElement::from_sorted(u.ambient(), std::move(f));
}

namespace detail {

void add_scaled(std::vector<FreeTerm>& f, std::size_t from, const Scalar& c, const Monomial& m, const std::vector<FreeTerm>& g) {
  if (c.is_zero()) {
    if (from) f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(from));
    return;
  }
  std::vector<FreeTerm> out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  const std::int32_t dw = m.degree();
  FreeTerm scratch;
  while (j < g.size()) {
    scratch.mon = g[j].mon * m;
    scratch.comp = g[j].comp;
    scratch.weight = g[j].weight + dw;
    int cmp = -1;
    while (i < f.size() && (cmp = term_compare(f[i], scratch)) > 0) out.push_back(std::move(f[i++]));
    if (i < f.size() && cmp == 0) {
      Scalar s = f[i].coef + c * g[j].coef;
      if (!s.is_zero()) {
        f[i].coef = std::move(s);
        out.push_back(std::move(f[i]));
      }
      ++i;
    } else {
      scratch.coef = c * g[j].coef;
      out.push_back(scratch);
    }
    ++j;
  }
  while (i < f.size()) out.push_back(std::move(f[i++]));
  f = std::move(out);
}

}  // namespace detail

}  // namespace hdeg
