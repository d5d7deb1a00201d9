#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdeg/polynomial.hpp"

namespace hdeg {

/// Graded free module S(-a_1) + ... + S(-a_r).  Each basis element also
/// carries an elimination block: terms in a higher block are larger than
/// any term of a lower block.  Within a block the order is term over
/// position: twisted degree, then grevlex, then lower basis index first.
class FreeModule {
 public:
  static constexpr std::int32_t kBlockWeight = 1 << 20;

  FreeModule(RingPtr ring, std::vector<int> twists, std::vector<int> blocks = {});

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int i) const { return twists_[i]; }
  int block(int i) const { return blocks_[i]; }
  const std::vector<int>& twists() const { return twists_; }
  const std::vector<int>& blocks() const { return blocks_; }

  std::int32_t weight(int comp, const Monomial& m) const {
    return blocks_[comp] * kBlockWeight + twists_[comp] + m.degree();
  }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return *a.ring_ == *b.ring_ && a.twists_ == b.twists_ && a.blocks_ == b.blocks_;
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  std::vector<int> blocks_;
};

using FreeModulePtr = std::shared_ptr<const FreeModule>;

FreeModulePtr make_free_module(RingPtr ring, std::vector<int> twists, std::vector<int> blocks = {});
void check_same_ambient(const FreeModulePtr& a, const FreeModulePtr& b);

struct FreeTerm {
  Monomial mon;
  std::uint32_t comp = 0;
  std::int32_t weight = 0;
  Scalar coef;
};

/// Positive if a > b in the module order.
inline int term_compare(const FreeTerm& a, const FreeTerm& b) {
  if (a.weight != b.weight) return a.weight < b.weight ? -1 : 1;
  int c = revlex_compare(a.mon, b.mon);
  if (c) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

/// Element of a graded free module; terms strictly decreasing.
class FreeElement {
 public:
  explicit FreeElement(FreeModulePtr ambient);
  static FreeElement basis(FreeModulePtr ambient, int i);
  /// p * e_i
  static FreeElement from_polynomial(FreeModulePtr ambient, int i, const Polynomial& p);
  /// Canonicalizes (sort, merge, drop zeros) and recomputes weights.
  static FreeElement from_terms(FreeModulePtr ambient, std::vector<FreeTerm> terms);
  /// Trusts that terms are sorted, merged, nonzero and weighted.
  static FreeElement from_sorted(FreeModulePtr ambient, std::vector<FreeTerm> terms);

  const FreeModulePtr& ambient() const { return ambient_; }
  const std::vector<FreeTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const FreeTerm& lead() const { return terms_.front(); }

  Polynomial component(int i) const;
  bool is_homogeneous() const;
  /// Common twisted degree; empty for zero or inhomogeneous elements.
  std::optional<int> degree() const;

  FreeElement operator-() const;
  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  FreeElement times(const Polynomial& p) const;
  FreeElement times(const Scalar& c, const Monomial& m) const;
  FreeElement monic() const;

  /// Same coefficients viewed in another free module of the same rank
  /// layout, with component i sent to i + offset.
  FreeElement moved_to(const FreeModulePtr& target, int offset = 0) const;

  friend bool operator==(const FreeElement& a, const FreeElement& b);
  friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FreeModulePtr ambient_;
  std::vector<FreeTerm> terms_;
};

/// u + c * m * v
FreeElement free_element_scale_add(const FreeElement& u, const Scalar& c, const Monomial& m, const FreeElement& v);

namespace detail {

/// f[from..] + c * m * g, written back into f from position `from`.
void add_scaled(std::vector<FreeTerm>& f, std::size_t from, const Scalar& c, const Monomial& m, const std::vector<FreeTerm>& g);

}  // namespace detail

}  // namespace hdeg
