#include "hdeg/monomial.hpp"

#include <functional>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

std::uint8_t checked_exponent(int e) {
  if (e < 0 || e > 255) throw CapExceeded("exponent " + std::to_string(e) + " outside [0, 255]");
  return static_cast<std::uint8_t>(e);
}

}  // namespace

Monomial::Monomial(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(int nvars, std::initializer_list<int> exps) : Monomial(nvars, std::vector<int>(exps)) {}

Monomial::Monomial(int nvars, const std::vector<int>& exps) : Monomial(nvars) {
  if (static_cast<int>(exps.size()) != nvars) throw InputError("exponent vector length does not match variable count");
  int d = 0;
  for (int i = 0; i < nvars; ++i) {
    exps_[i] = checked_exponent(exps[i]);
    d += exps[i];
  }
  degree_ = static_cast<std::uint16_t>(d);
}

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m(nvars);
  if (index < 0 || index >= nvars) throw InputError("variable index out of range");
  m.exps_[index] = checked_exponent(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (exps_[i]) s |= 1u << i;
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = a.exps_[i] + b.exps_[i];
    if (e > 255) throw CapExceeded("exponent overflow in monomial product");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  if (b.nvars_ > r.nvars_) r.nvars_ = b.nvars_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string s;
  for (int i = 0; i < nvars_; ++i) {
    if (!exps_[i]) continue;
    if (!s.empty()) s += '*';
    s += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? Ordering::less : Ordering::greater;
  int c = revlex_compare(a, b);
  return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

Ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw InputError("monomials live in rings with different variable counts");
  return order.compare(a, b);
}

}  // namespace hdeg
