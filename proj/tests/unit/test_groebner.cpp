#include "doctest.h"
#include "hdeg/error.hpp"
#include "test_helpers.hpp"

using namespace hdeg;
using testutil::gb_strings;
using testutil::poly;

TEST_CASE("reduced basis of a small ideal") {
  auto R = testutil::ring({"x", "y"});
  CHECK(gb_strings(R, {"x^2-y^2", "x^2+y^2"}) == std::vector<std::string>{"y^2", "x^2"});
}

TEST_CASE("normal form") {
  auto R = testutil::ring({"x", "y"});
  auto F = testutil::rank_one(R);
  auto gb = groebner_basis(ideal_as_submodule({poly(R, "x^2-y^2")}, F));
  FreeElement f = FreeElement::from_polynomial(F, 0, poly(R, "x^2*y"));
  CHECK(gb.normal_form(f).component(0) == poly(R, "y^3"));
}

TEST_CASE("twisted cubic") {
  auto R = testutil::ring({"a", "b", "c", "d"});
  auto g = gb_strings(R, {"a*c-b^2", "b*d-c^2", "a*d-b*c"});
  CHECK(g.size() == 3);
}

TEST_CASE("inhomogeneous input is rejected") {
  auto R = testutil::ring({"x", "y"});
  auto F = testutil::rank_one(R);
  CHECK_THROWS_AS(groebner_basis(ideal_as_submodule({poly(R, "x^2-y")}, F)), InputError);
}

TEST_CASE("basis is idempotent and membership is sound") {
  auto R = testutil::ring({"x", "y", "z"});
  auto F = testutil::rank_one(R);
  auto I = ideal_as_submodule(testutil::ideal(R, {"x^2-y*z", "x*y-z^2", "y^3-x*z^2"}), F);
  auto gb = groebner_basis(I);
  CHECK(groebner_basis(gb.as_gens()) == gb);
  for (const auto& g : I.gens) CHECK(gb.contains(g.times(poly(R, "x*y+z^2"))));
  CHECK_FALSE(gb.contains(FreeElement::from_polynomial(F, 0, poly(R, "x"))));
}

TEST_CASE("minimal generators") {
  auto R = testutil::ring({"x", "y"});
  auto F = testutil::rank_one(R);
  auto I = ideal_as_submodule(testutil::ideal(R, {"x^2", "x*y", "x^2*y", "x^2+x*y", "y^3"}), F);
  CHECK(minimal_generators(I).gens.size() == 3);
}

TEST_CASE("degree cap") {
  auto R = testutil::ring({"x", "y", "z"});
  auto F = testutil::rank_one(R);
  Limits lim;
  lim.degree_cap = 3;
  auto I = ideal_as_submodule(testutil::ideal(R, {"x^3-y^2*z", "x*y^2-z^3"}), F);
  CHECK_THROWS_AS(groebner_basis(I, lim), CapExceeded);
}
