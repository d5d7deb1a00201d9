#include <random>

#include "doctest.h"
#include "hdeg/error.hpp"
#include "test_helpers.hpp"

using namespace hdeg;
using testutil::poly;

TEST_CASE("rational scalars stay exact past 64 bits") {
  Scalar a = Scalar::rational(std::int64_t{1} << 62, 3);
  Scalar b = a * a * a;
  CHECK(b / a / a == a);
  CHECK((b - b).is_zero());
  CHECK(Scalar::rational(6, -4).to_string() == "-3/2");
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  Scalar three = f.from_int(3);
  CHECK((three * three.inverse()).is_one());
  CHECK(f.from_int(10) == three);
  CHECK(f.from_rational(mpq_class(1, 2)) == f.from_int(4));
  CHECK_THROWS_AS(Field::prime(9), InputError);
  CHECK_THROWS_AS(three + Scalar::rational(1), InputError);
}

TEST_CASE("polynomial printing and parsing round trip") {
  auto R = testutil::ring({"x", "y", "z"});
  CHECK(poly(R, "(x+y)*(x-y)").to_string() == "x^2-y^2");
  CHECK(poly(R, "3/2*x*y - z^2").to_string() == "3/2*x*y-z^2");
  Polynomial p = poly(R, "(x + 2*y - z)^3");
  CHECK(poly(R, p.to_string()) == p);
  CHECK_THROWS_AS(poly(R, "x + w"), ParseError);
  CHECK_THROWS_AS(poly(R, "x / y"), ParseError);
}

TEST_CASE("frobenius in characteristic two") {
  auto R = testutil::ring({"x", "y"}, 2);
  CHECK(poly(R, "(x+y)^2") == poly(R, "x^2+y^2"));
}

TEST_CASE("mismatched rings are rejected") {
  auto R = testutil::ring({"x", "y"});
  auto T = testutil::ring({"x", "y", "z"});
  CHECK_THROWS_AS(poly(R, "x") + poly(T, "x"), InputError);
}

TEST_CASE("grevlex order in three variables") {
  auto cmp = [](Monomial a, Monomial b) { return MonomialOrder{}.compare(a, b); };
  CHECK(cmp(Monomial(3, {1, 0, 0}), Monomial(3, {0, 1, 0})) == Ordering::greater);
  CHECK(cmp(Monomial(3, {0, 2, 0}), Monomial(3, {1, 0, 1})) == Ordering::greater);
  CHECK(cmp(Monomial(3, {1, 0, 1}), Monomial(3, {0, 2, 0})) == Ordering::less);
  CHECK_THROWS_AS(monomial_compare(MonomialOrder{}, Monomial(2), Monomial(3)), InputError);

  // total, antisymmetric, transitive, compatible: exhaustive to degree four
  std::vector<Monomial> all;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c) all.push_back(Monomial(3, {a, b, c}));
  for (const auto& u : all)
    for (const auto& v : all) {
      Ordering o = cmp(u, v);
      CHECK((o == Ordering::equal) == (u == v));
      CHECK(static_cast<int>(cmp(v, u)) == -static_cast<int>(o));
      for (const auto& w : all) {
        if (o == Ordering::greater && cmp(v, w) == Ordering::greater) CHECK(cmp(u, w) == Ordering::greater);
        if (o == Ordering::greater) CHECK(cmp(u * w, v * w) == Ordering::greater);
      }
    }
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = testutil::ring({"x", "y", "z"});
  std::mt19937_64 rng(7);
  auto random_poly = [&]() {
    std::vector<Polynomial::Term> t;
    for (int i = 0; i < 4; ++i) {
      Monomial m(3, {int(rng() % 3), int(rng() % 3), int(rng() % 3)});
      t.push_back({m, Scalar::rational(std::int64_t(rng() % 7) - 3, 1 + rng() % 3)});
    }
    return Polynomial::from_terms(R, t);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}
