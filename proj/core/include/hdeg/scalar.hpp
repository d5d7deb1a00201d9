#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace hdeg {

class Scalar;

/// Coefficient field: the rationals, or a prime field Z/p with p < 2^31.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element.  Rationals keep a 64-bit fast path and fall back
/// to GMP when a value no longer fits.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar rational(std::int64_t num, std::int64_t den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::int64_t v, std::uint32_t p);

  Field field() const;
  std::uint32_t modulus() const { return mod_; }

  bool is_zero() const;
  bool is_one() const;
  /// Sign used for printing; residues are read in (-p/2, p/2].
  bool is_negative() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact value as a GMP rational (residues map to their symmetric lift).
  mpq_class to_mpq() const;
  std::string to_string() const;

 private:
  static Scalar from_big(mpq_class q);
  void check_same_field(const Scalar& b) const;

  std::uint32_t mod_ = 0;  // 0: rational
  std::int64_t num_ = 0;   // residue in [0, p) when mod_ != 0
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hdeg
