#pragma once

#include <cstdint>
#include <vector>

#include "hdeg/module.hpp"

namespace hdeg {

/// numerator(t) / (1-t)^denominator_exponent, with numerator a Laurent
/// polynomial: coefficient k belongs to t^(low + k).
struct HilbertSeries {
  int low = 0;
  std::vector<std::int64_t> numerator;
  int denominator_exponent = 0;

  /// Same series with all (1-t) factors cancelled; zero series stays zero.
  HilbertSeries reduced() const;
  bool is_zero() const;
  /// Value of the reduced numerator at t = 1 (degree of the module).
  std::int64_t degree() const;
  /// Dimension of the graded piece in degree d.
  std::int64_t coefficient(int d) const;
};

HilbertSeries hilbert_series(const Presentation& M);

/// Coefficients e^0..e^s of the polynomial
///   sum_i (-1)^i e^i C(n+s-i, s-i)
/// matching n -> l(M / I^{n+1} M) for all n >= postulation.
struct HilbertCoefficients {
  int s = 0;
  std::vector<std::int64_t> e;
  int postulation = 0;
  std::vector<std::int64_t> samples;

  /// The fitted polynomial at n.
  std::int64_t polynomial_at(int n) const;
};

/// Incrementally built lengths l(M / I^{n+1} M).
class SamuelFunction {
 public:
  SamuelFunction(Presentation M, IdealGens I, Limits limits = {});
  std::int64_t at(int n);
  const Presentation& module() const { return M_; }
  /// Generators of I^{n+1} M (relations of M not included).
  const SubmoduleGens& power_module(int n);

 private:
  void extend_to(int n);

  Presentation M_;
  IdealGens I_;
  Limits limits_;
  std::vector<SubmoduleGens> powers_;
  std::vector<std::int64_t> lengths_;
};

/// Length of M / I^{n+1} M; throws InputError unless I is m-primary on M.
std::int64_t samuel_function(const Presentation& M, const IdealGens& I, int n, const Limits& limits = {});

HilbertCoefficients hilbert_coefficients(const Presentation& M, const IdealGens& I, const Limits& limits = {});
HilbertCoefficients hilbert_coefficients(SamuelFunction& f, int s, const Limits& limits = {});

std::int64_t multiplicity(const Presentation& M, const IdealGens& I, const Limits& limits = {});

/// Binomial coefficient C(n, k) as a checked 64-bit integer (0 when k < 0 or k > n, n >= 0).
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace hdeg
