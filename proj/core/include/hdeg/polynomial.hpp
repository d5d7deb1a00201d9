#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdeg/monomial.hpp"
#include "hdeg/scalar.hpp"

namespace hdeg {

/// Polynomial ring k[x_1, ..., x_n] with named variables.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 when the name is not a variable.
  int index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.field_ == b.field_ && a.names_ == b.names_; }

 private:
  Field field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> names);
void check_same_ring(const RingPtr& a, const RingPtr& b);

class Polynomial {
 public:
  struct Term {
    Monomial mon;
    Scalar coef;
  };

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, const Scalar& c, const Monomial& m);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }

  bool is_homogeneous() const;
  /// Common degree of all terms; empty for zero or inhomogeneous input.
  std::optional<int> degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  RingPtr ring_;
  std::vector<Term> terms_;  // strictly decreasing in grevlex
};

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q);

using IdealGens = std::vector<Polynomial>;

}  // namespace hdeg
