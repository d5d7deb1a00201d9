#include "doctest.h"
#include "hdeg/error.hpp"
#include "hdeg/invariants.hpp"
#include "test_helpers.hpp"

using namespace hdeg;
using testutil::cyclic;
using testutil::ideal;
using testutil::poly;
using V = std::vector<std::int64_t>;

namespace {

struct Ex39 {
  RingPtr R;
  Presentation A;
  IdealGens Q;
};

Ex39 ex39(int l, int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= l; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= l; ++i) names.push_back("y" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("z" + std::to_string(i));
  auto R = testutil::ring(names);
  std::vector<std::string> J, Q;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) J.push_back("x" + std::to_string(i) + "*y" + std::to_string(j));
  for (int i = 1; i <= l; ++i) Q.push_back("x" + std::to_string(i) + "-y" + std::to_string(i));
  for (int i = 1; i <= m; ++i) Q.push_back("z" + std::to_string(i));
  return {R, cyclic(R, J), ideal(R, Q)};
}

}  // namespace

TEST_CASE("hdeg of small modules") {
  auto R = testutil::ring({"x", "y"});
  auto m = ideal(R, {"x", "y"});
  CHECK(hdeg::hdeg(cyclic(R, {}), m) == 1);
  CHECK(hdeg::hdeg(cyclic(R, {"x*y"}), ideal(R, {"x-y"})) == 2);
  // Y = S/(x^2, xy): e0 = 1 w.r.t. (y), H^0 has length one
  CHECK(hdeg::hdeg(cyclic(R, {"x^2", "x*y"}), ideal(R, {"y"})) == 2);
  CHECK(hdeg::hdeg(cyclic(R, {"1"}), m) == 0);
}

TEST_CASE("ex39 invariants") {
  auto e = ex39(2, 1);
  InvariantSession s;
  CHECK(s.hdeg(e.A, e.Q) == 3);
  CHECK(s.torsion(e.A, e.Q, 1) == 1);
  CHECK(s.torsion(e.A, e.Q, 2) == 0);
  CHECK(s.h0_length(e.A) == 0);
  CHECK_FALSE(s.stuckrad_vogel(e.A).has_value());
  CHECK_FALSE(s.is_generalized_cm(e.A));
  CHECK(s.chi1(e.Q, e.A) == 1);
}

TEST_CASE("ex46 invariants") {
  auto T = testutil::ring({"x", "y", "z"});
  auto Q = ideal(T, {"x-y", "x-z"});
  for (int l = 1; l <= 3; ++l) {
    auto A = cyclic(T, {"x*y^" + std::to_string(l), "x*z"});
    InvariantSession s;
    auto r = s.report(A, Q);
    CHECK(r.e.e == V{1, -l, -(l * (l - 1) / 2)});
    CHECK(r.hdeg == l + 1);
    CHECK(r.torsions == V{l});
    CHECK(r.chi1 == 1);
    CHECK(r.length_mod_I == 2);
    // the one-dimensional component makes H^1 non-finite: M_1 has dimension one
    CHECK_FALSE(r.generalized_cm);
    CHECK_FALSE(r.unmixed);
    auto L = s.duals(A);
    CHECK(L.dims[1] == 1);
    CHECK(s.hdeg(L.duals[1], Q) == l);
  }
}

TEST_CASE("h0 and the Stuckrad-Vogel invariant") {
  auto R = testutil::ring({"x", "y"});
  auto Y = cyclic(R, {"x^2", "x*y"});
  CHECK(h0_length(Y) == 1);
  CHECK(h0_length(cyclic(R, {"x*y"})) == 0);
  CHECK(stuckrad_vogel(Y) == 1);
  CHECK(stuckrad_vogel(cyclic(R, {})) == 0);
}

TEST_CASE("unmixedness") {
  auto R = testutil::ring({"x", "y"});
  CHECK(is_unmixed(cyclic(R, {"x*y"})));
  CHECK_FALSE(is_unmixed(cyclic(R, {"x^2", "x*y"})));
  CHECK_THROWS_AS(is_unmixed(cyclic(R, {"1"})), InputError);
  CHECK(is_generalized_cm(cyclic(R, {})));
}

TEST_CASE("d-sequences") {
  auto R = testutil::ring({"x", "y"});
  CHECK(is_d_sequence(ideal(R, {"x", "y"}), cyclic(R, {})).holds);
  CHECK(is_d_sequence(ideal(R, {"x-y"}), cyclic(R, {"x*y"})).holds);
  auto r = is_d_sequence(ideal(R, {"x", "y"}), cyclic(R, {"x^2", "x*y"}));
  CHECK_FALSE(r.holds);
  CHECK(r.i == 1);
  CHECK(r.j == 1);
}

TEST_CASE("superficial elements") {
  auto R = testutil::ring({"x", "y"});
  auto m = ideal(R, {"x", "y"});
  CHECK(is_superficial(poly(R, "x"), cyclic(R, {}), m) == Superficial::yes);
  CHECK(is_superficial(poly(R, "x"), cyclic(R, {"x^2", "x*y"}), m) == Superficial::no);
  CHECK(is_superficial(poly(R, "x-y"), cyclic(R, {"x*y"}), m) == Superficial::yes);
  CHECK_THROWS_AS(is_superficial(poly(R, "x"), cyclic(R, {}), ideal(R, {"y"})), InputError);
}

TEST_CASE("d-sequence coefficient formulas") {
  auto R = testutil::ring({"x", "y"});
  CHECK(dseq_coefficients(ideal(R, {"x", "y"}), cyclic(R, {})).from_lengths == V{1, 0, 0});
  CHECK(dseq_coefficients(ideal(R, {"y"}), cyclic(R, {"x^2", "x*y"})).from_lengths == V{1, -1});
  auto T = testutil::ring({"x", "y", "z"});
  auto Q = ideal(T, {"x-y", "x-z"});
  auto A1 = cyclic(T, {"x*y", "x*z"});
  REQUIRE(is_d_sequence(Q, A1).holds);
  CHECK(dseq_coefficients(Q, A1).from_lengths == V{1, -1, 0});
  // depth one forces e^2 = 0 for a d-sequence, but e^2 = -1 here
  auto A2 = cyclic(T, {"x*y^2", "x*z"});
  CHECK_FALSE(is_d_sequence(Q, A2).holds);
  CHECK_THROWS_AS(dseq_coefficients(Q, A2), InputError);
}

TEST_CASE("one session over several rings") {
  auto R = testutil::ring({"x", "y"});
  auto T = testutil::ring({"x", "y", "z"});
  InvariantSession s;
  CHECK(s.duals(cyclic(R, {"x"})).dim == 1);
  CHECK(s.duals(cyclic(T, {"x"})).dim == 2);
  CHECK(s.hdeg(cyclic(T, {"x"}), ideal(T, {"y", "z"})) == 1);
}
