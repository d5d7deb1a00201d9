#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdeg/monomial.hpp"

namespace hdeg {

/// Krull dimension marker for the zero module (stands in for minus infinity).
inline constexpr int kDimZeroModule = -1;

namespace monideal {

/// Drops generators divisible by another generator; result sorted by degree.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// dim k[x]/I: size of a largest variable subset containing no generator's
/// support.  kDimZeroModule when 1 is in I.
int dimension(const std::vector<Monomial>& gens, int nvars);

/// Number of standard monomials, or empty when there are infinitely many.
std::optional<std::int64_t> count_standard(const std::vector<Monomial>& gens, int nvars);

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of k[x]/I.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars);

}  // namespace monideal
}  // namespace hdeg
