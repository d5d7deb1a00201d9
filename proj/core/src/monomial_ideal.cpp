#include "hdeg/monomial_ideal.hpp"

#include <algorithm>
#include <bit>

namespace hdeg::monideal {

namespace {

using Poly = std::vector<std::int64_t>;

void add_into(Poly& a, const Poly& b, int shift, std::int64_t sign) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly numerator_rec(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};

  std::vector<int> count(nvars, 0);
  for (const auto& g : gens)
    for (int v = 0; v < nvars; ++v)
      if (g[v]) ++count[v];
  int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[pivot] <= 1) {
    Poly r{1};
    for (const auto& g : gens) {
      Poly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = mul(r, f);
    }
    trim(r);
    return r;
  }

  std::vector<int> exps;
  int pure = 0;
  for (const auto& g : gens) {
    if (!g[pivot]) continue;
    if (g.degree() == g[pivot])
      pure = g[pivot];
    else
      exps.push_back(g[pivot]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps.empty() ? 1 : exps[exps.size() / 2];
  if (pure && e >= pure) e = pure - 1;
  if (e < 1) e = 1;
  Monomial p = Monomial::variable(nvars, pivot, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, p));

  Poly r = numerator_rec(std::move(plus), nvars);
  add_into(r, numerator_rec(std::move(colon), nvars), e, 1);
  trim(r);
  return r;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  return out;
}

int dimension(const std::vector<Monomial>& gens, int nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) return kDimZeroModule;
    supports.push_back(g.support());
  }
  std::sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    bool red = false;
    for (auto t : minimal)
      if ((t & s) == t) {
        red = true;
        break;
      }
    if (!red) minimal.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t u = 0; u <= full; ++u) {
    int pc = std::popcount(u);
    if (pc <= best) {
      if (u == full) break;
      continue;
    }
    bool ok = true;
    for (auto t : minimal)
      if ((t & u) == t) {
        ok = false;
        break;
      }
    if (ok) best = pc;
    if (u == full) break;
  }
  return best;
}

std::optional<std::int64_t> count_standard(const std::vector<Monomial>& gens, int nvars) {
  if (dimension(gens, nvars) > 0) return std::nullopt;
  std::vector<Monomial> mins = minimalize(gens);
  auto standard = [&](const Monomial& m) {
    for (const auto& g : mins)
      if (g.divides(m)) return false;
    return true;
  };
  std::int64_t total = 0;
  std::vector<Monomial> level;
  if (standard(Monomial(nvars))) level.push_back(Monomial(nvars));
  while (!level.empty()) {
    total += static_cast<std::int64_t>(level.size());
    std::vector<Monomial> next;
    for (const auto& m : level) {
      int last = 0;
      for (int v = nvars - 1; v >= 0; --v)
        if (m[v]) {
          last = v;
          break;
        }
      for (int v = last; v < nvars; ++v) {
        Monomial c = m * Monomial::variable(nvars, v);
        if (standard(c)) next.push_back(c);
      }
    }
    level = std::move(next);
  }
  return total;
}

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars) { return numerator_rec(std::move(gens), nvars); }

}  // namespace hdeg::monideal
