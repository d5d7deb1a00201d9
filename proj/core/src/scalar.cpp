#include "hdeg/scalar.hpp"

#include <limits>

#include "hdeg/error.hpp"

namespace hdeg {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1, x = static_cast<std::uint64_t>(b) % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Scalar Field::zero() const { return is_rational() ? Scalar::rational(0) : Scalar::residue(0, p_); }
Scalar Field::one() const { return is_rational() ? Scalar::rational(1) : Scalar::residue(1, p_); }
Scalar Field::from_int(std::int64_t v) const { return is_rational() ? Scalar::rational(v) : Scalar::residue(v, p_); }

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar::rational(q);
  std::int64_t d = reduce_mod(q.get_den(), p_);
  if (d == 0) throw InputError("denominator divisible by the field characteristic " + std::to_string(p_));
  return Scalar::residue(reduce_mod(q.get_num(), p_), p_) / Scalar::residue(d, p_);
}

std::string Field::to_string() const { return is_rational() ? "QQ" : "ZZ/" + std::to_string(p_); }

Scalar::Scalar(const Scalar& o) : mod_(o.mod_), num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this != &o) {
    mod_ = o.mod_;
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("division by zero");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Scalar s;
  if (fits64(n) && fits64(d)) {
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  mpq_class q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return from_big(std::move(q));
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return from_big(std::move(c));
}

Scalar Scalar::from_big(mpq_class q) {
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
  } else {
    s.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  Scalar s;
  s.mod_ = p;
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  s.num_ = r;
  return s;
}

Field Scalar::field() const { return mod_ == 0 ? Field::rationals() : Field::prime(mod_); }

bool Scalar::is_zero() const { return big_ ? false : num_ == 0; }
bool Scalar::is_one() const { return big_ ? false : (num_ == 1 && den_ == 1); }

bool Scalar::is_negative() const {
  if (mod_) return num_ > static_cast<std::int64_t>(mod_ / 2);
  if (big_) return sgn(*big_) < 0;
  return num_ < 0;
}

void Scalar::check_same_field(const Scalar& b) const {
  if (mod_ != b.mod_) throw InputError("field mismatch in scalar arithmetic");
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  if (mod_) return mpq_class(is_negative() ? num_ - static_cast<std::int64_t>(mod_) : num_);
  return mpq_class(mpz_class(num_), mpz_class(den_));
}

Scalar Scalar::operator-() const {
  if (mod_) return residue(num_ == 0 ? 0 : mod_ - num_, mod_);
  if (big_) return from_big(-*big_);
  if (num_ == std::numeric_limits<std::int64_t>::min()) return from_big(-to_mpq());
  Scalar s;
  s.num_ = -num_;
  s.den_ = den_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (mod_) return residue(mod_pow(num_, mod_ - 2, mod_), mod_);
  if (big_) return from_big(1 / *big_);
  return rational(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.mod_) {
    std::int64_t r = a.num_ + b.num_;
    if (r >= a.mod_) r -= a.mod_;
    Scalar s;
    s.mod_ = a.mod_;
    s.num_ = r;
    return s;
  }
  if (a.big_ || b.big_) return Scalar::from_big(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.num_, b.num_, &r)) {
      Scalar s;
      s.num_ = r;
      return s;
    }
  }
  using i128 = __int128;
  i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) return Scalar{};
  if (fits64(n) && fits64(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return Scalar::from_big(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.mod_) {
    Scalar s;
    s.mod_ = a.mod_;
    s.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_) % a.mod_);
    return s;
  }
  if (a.big_ || b.big_) return Scalar::from_big(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Scalar{};
  using i128 = __int128;
  i128 g1 = gcd128(a.num_, b.den_), g2 = gcd128(b.num_, a.den_);
  i128 n = (static_cast<i128>(a.num_) / g1) * (static_cast<i128>(b.num_) / g2);
  i128 d = (static_cast<i128>(a.den_) / g2) * (static_cast<i128>(b.den_) / g1);
  if (fits64(n) && fits64(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return Scalar::from_big(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) return false;
  if (a.big_ || b.big_) return a.to_mpq() == b.to_mpq();
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (mod_) {
    std::int64_t v = is_negative() ? num_ - static_cast<std::int64_t>(mod_) : num_;
    return std::to_string(v);
  }
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hdeg
