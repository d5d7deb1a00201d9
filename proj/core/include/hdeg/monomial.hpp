#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hdeg {

inline constexpr int kMaxVars = 16;

/// Exponent vector in at most kMaxVars variables with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::initializer_list<int> exps);
  Monomial(int nvars, const std::vector<int>& exps);

  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Reverse-lexicographic tie break for monomials of equal degree:
  /// negative if a < b, zero if equal, positive if a > b.
  friend int revlex_compare(const Monomial& a, const Monomial& b) {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? 1 : -1;
    return 0;
  }

  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// The only ring order: degree reverse lexicographic with x_1 > x_2 > ...
/// Modules extend it term-over-position (see FreeModule).
struct MonomialOrder {
  Ordering compare(const Monomial& a, const Monomial& b) const;
};

/// Checked comparison; throws InputError on a variable-count mismatch.
Ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace hdeg
