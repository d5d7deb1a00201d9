#include "hdeg/hilbert.hpp"

#include <gmpxx.h>

#include <limits>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

std::int64_t checked(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw EngineError(std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

mpz_class binom_mpz(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Solves the square system a x = b exactly; empty when singular.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) { return checked(binom_mpz(static_cast<long>(n), static_cast<long>(k)), "binomial coefficient"); }

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries r = *this;
  while (!r.numerator.empty() && r.numerator.back() == 0) r.numerator.pop_back();
  if (r.numerator.empty()) return HilbertSeries{};
  while (r.denominator_exponent > 0) {
    std::int64_t sum = 0;
    for (auto c : r.numerator) sum += c;
    if (sum != 0) break;
    // divide by (1 - t): q_k = sum_{j <= k} p_j
    std::vector<std::int64_t> q(r.numerator.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < r.numerator.size(); ++k) q[k] = acc += r.numerator[k];
    r.numerator = std::move(q);
    --r.denominator_exponent;
  }
  return r;
}

bool HilbertSeries::is_zero() const {
  for (auto c : numerator)
    if (c) return false;
  return true;
}

std::int64_t HilbertSeries::degree() const {
  std::int64_t s = 0;
  for (auto c : reduced().numerator) s += c;
  return s;
}

std::int64_t HilbertSeries::coefficient(int d) const {
  mpz_class total = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    long shift = d - low - static_cast<long>(k);
    if (shift < 0) continue;
    if (denominator_exponent == 0) {
      if (shift == 0) total += numerator[k];
    } else {
      total += numerator[k] * binom_mpz(shift + denominator_exponent - 1, denominator_exponent - 1);
    }
  }
  return checked(total, "Hilbert function value");
}

HilbertSeries hilbert_series(const Presentation& M) {
  const int n = M.ring()->nvars();
  HilbertSeries h;
  h.denominator_exponent = n;
  auto leads = M.relations_gb().lead_monomials();
  if (M.rank() == 0) return h;
  int low = std::numeric_limits<int>::max();
  for (int c = 0; c < M.rank(); ++c) low = std::min(low, M.ambient()->twist(c));
  h.low = low;
  for (int c = 0; c < M.rank(); ++c) {
    auto k = monideal::hilbert_numerator(leads[c], n);
    std::size_t off = static_cast<std::size_t>(M.ambient()->twist(c) - low);
    if (h.numerator.size() < off + k.size()) h.numerator.resize(off + k.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i) h.numerator[off + i] += k[i];
  }
  while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();
  return h;
}

std::int64_t HilbertCoefficients::polynomial_at(int n) const {
  mpz_class v = 0;
  for (int i = 0; i <= s; ++i) {
    mpz_class t = e[i] * binom_mpz(n + s - i, s - i);
    if (i % 2) v -= t;
    else v += t;
  }
  return checked(v, "Hilbert polynomial value");
}

SamuelFunction::SamuelFunction(Presentation M, IdealGens I, Limits limits)
    : M_(std::move(M)), I_(std::move(I)), limits_(limits) {
  if (I_.empty()) throw InputError("the ideal has no generators");
  for (const auto& f : I_)
    if (!f.is_homogeneous() || f.is_zero()) throw InputError("graded surrogate requires homogeneous data: " + f.to_string());
}

void SamuelFunction::extend_to(int n) {
  if (n > limits_.sample_cap) throw CapExceeded("Hilbert-Samuel sampling exceeded the sample cap " + std::to_string(limits_.sample_cap));
  while (static_cast<int>(lengths_.size()) <= n) {
    const int k = static_cast<int>(lengths_.size());
    SubmoduleGens next(M_.ambient());
    if (k == 0) {
      next = ideal_times(I_, M_);
    } else {
      for (const auto& g : powers_.back().gens)
        for (const auto& f : I_) next.gens.push_back(g.times(f));
    }
    SubmoduleGens all = M_.relations();
    const std::size_t nr = all.gens.size();
    all.gens.insert(all.gens.end(), next.gens.begin(), next.gens.end());
    GroebnerOptions opts;
    opts.limits = limits_;
    opts.stop_when_finite = k > 0;
    GroebnerResult res = groebner_compute(all, opts);
    Presentation quot(M_.ambient(), std::move(res.basis));
    Length len = quotient_length(quot);
    if (!len) throw InputError("ideal is not primary to the maximal ideal on this module (dim M/IM > 0)");
    SubmoduleGens kept(M_.ambient());
    for (std::size_t idx : res.minimal)
      if (idx >= nr) kept.gens.push_back(all.gens[idx]);
    powers_.push_back(std::move(kept));
    lengths_.push_back(*len);
  }
}

std::int64_t SamuelFunction::at(int n) {
  if (n < 0) throw InputError("negative Samuel function index");
  extend_to(n);
  return lengths_[n];
}

const SubmoduleGens& SamuelFunction::power_module(int n) {
  extend_to(n);
  return powers_[n];
}

std::int64_t samuel_function(const Presentation& M, const IdealGens& I, int n, const Limits& limits) {
  SamuelFunction f(M, I, limits);
  return f.at(n);
}

HilbertCoefficients hilbert_coefficients(SamuelFunction& f, int s, const Limits& limits) {
  if (s < 0) throw InputError("Hilbert coefficients of the zero module");
  const int W = s + 2;
  for (int w = 0;; ++w) {
    if (w + s + W > limits.sample_cap)
      throw CapExceeded("Hilbert-Samuel function did not stabilize within the sample cap " + std::to_string(limits.sample_cap));
    std::vector<std::vector<mpq_class>> a(s + 1, std::vector<mpq_class>(s + 1));
    std::vector<mpq_class> b(s + 1);
    for (int r = 0; r <= s; ++r) {
      const int n = w + r;
      for (int i = 0; i <= s; ++i) {
        mpz_class c = binom_mpz(n + s - i, s - i);
        a[r][i] = i % 2 ? mpq_class(-c) : mpq_class(c);
      }
      b[r] = f.at(n);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) continue;
    HilbertCoefficients h;
    h.s = s;
    bool integral = true;
    for (const auto& q : *x) {
      if (q.get_den() != 1) {
        integral = false;
        break;
      }
      h.e.push_back(checked(q.get_num(), "Hilbert coefficient"));
    }
    if (!integral || h.e[0] <= 0) continue;
    bool ok = true;
    for (int n = w + s + 1; n <= w + s + W && ok; ++n) ok = f.at(n) == h.polynomial_at(n);
    if (!ok) continue;
    int p = w;
    while (p > 0 && f.at(p - 1) == h.polynomial_at(p - 1)) --p;
    h.postulation = p;
    for (int n = 0; n <= w + s + W; ++n) h.samples.push_back(f.at(n));
    return h;
  }
}

HilbertCoefficients hilbert_coefficients(const Presentation& M, const IdealGens& I, const Limits& limits) {
  const int s = quotient_dimension(M);
  if (s == kDimZeroModule) throw InputError("Hilbert coefficients of the zero module");
  SamuelFunction f(M, I, limits);
  return hilbert_coefficients(f, s, limits);
}

std::int64_t multiplicity(const Presentation& M, const IdealGens& I, const Limits& limits) {
  return hilbert_coefficients(M, I, limits).e.at(0);
}

}  // namespace hdeg
