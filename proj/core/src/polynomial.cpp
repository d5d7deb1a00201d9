#include "hdeg/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  if (a.mon.degree() != b.mon.degree()) return a.mon.degree() > b.mon.degree();
  return revlex_compare(a.mon, b.mon) > 0;
}

}  // namespace

Ring::Ring(Field field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  if (names_.empty()) throw InputError("a ring needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

RingPtr make_ring(Field field, std::vector<std::string> names) {
  return std::make_shared<const Ring>(field, std::move(names));
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(*a == *b)) throw InputError("ring mismatch");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return term(std::move(ring), c, Monomial());
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  Scalar one = ring->field().one();
  return term(std::move(ring), one, m);
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, const Monomial& m) {
  if (c.modulus() != ring->field().characteristic()) throw InputError("coefficient field does not match ring field");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) {
    Monomial mm = m;
    if (mm.nvars() == 0 && p.ring_->nvars() > 0) mm = Monomial(p.ring_->nvars()) * m;
    p.terms_.push_back({mm, c});
  }
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.coef.modulus() != ring->field().characteristic()) throw InputError("coefficient field does not match ring field");
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mon.degree();
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef = -x.coef;
  return Polynomial(ring_, std::move(t));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a.ring_, b.ring_);
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && term_greater(a.terms_[i], b.terms_[j]))) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || term_greater(b.terms_[j], a.terms_[i])) {
      out.push_back(b.terms_[j++]);
    } else {
      Scalar c = a.terms_[i].coef + b.terms_[j].coef;
      if (!c.is_zero()) out.push_back({a.terms_[i].mon, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_multiply(a, b); }

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) {
  check_same_ring(p.ring(), q.ring());
  struct MonHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
  };
  std::unordered_map<Monomial, Scalar, MonHash> acc;
  for (const auto& s : p.terms())
    for (const auto& t : q.terms()) {
      Monomial m = s.mon * t.mon;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, s.coef * t.coef);
      else
        it->second += s.coef * t.coef;
    }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, c});
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef *= c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InputError("negative exponent");
  Polynomial r = constant(ring_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool neg = t.coef.is_negative();
    Scalar mag = neg ? -t.coef : t.coef;
    if (i == 0)
      s += neg ? "-" : "";
    else
      s += neg ? "-" : "+";
    bool unit = mag.is_one();
    if (t.mon.is_one()) {
      s += mag.to_string();
    } else {
      if (!unit) s += mag.to_string() + "*";
      s += t.mon.to_string(ring_->names());
    }
  }
  return s;
}

}  // namespace hdeg
