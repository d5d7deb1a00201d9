#include "doctest.h"
#include "hdeg/error.hpp"
#include "hdeg/homology.hpp"
#include "test_helpers.hpp"

using namespace hdeg;
using testutil::cyclic;
using testutil::ideal;
using V = std::vector<std::int64_t>;
using I = std::vector<int>;

TEST_CASE("free resolutions") {
  auto R = testutil::ring({"x", "y"});
  auto C1 = free_resolution(cyclic(R, {"x*y"}), 3);
  CHECK(C1.ranks() == I{1, 1});
  CHECK(C1.modules[1]->twists() == I{2});
  auto C2 = free_resolution(cyclic(R, {"x", "y"}), 3);
  CHECK(C2.ranks() == I{1, 2, 1});
  CHECK(C2.is_complex());

  auto T = testutil::ring({"X", "Y", "Z"});
  auto C3 = free_resolution(cyclic(T, {"X*Y^2", "X*Z"}), 4);
  CHECK(C3.ranks() == I{1, 2, 1});
  CHECK(C3.is_complex());

  auto U = testutil::ring({"a", "b", "c", "d"});
  auto C4 = free_resolution(cyclic(U, {"a*c-b^2", "b*d-c^2", "a*d-b*c"}), 5);
  CHECK(C4.ranks() == I{1, 3, 2});
  CHECK(C4.is_complex());
  auto C5 = free_resolution(cyclic(U, {"a^2", "a*b", "b*c^2", "d^3"}), 5);
  CHECK(C5.is_complex());
}

TEST_CASE("ext modules") {
  auto R1 = testutil::ring({"x"});
  auto e = ext_modules(cyclic(R1, {"x"}));
  CHECK(e[0].is_zero());
  CHECK(quotient_length(e[1]) == 1);

  auto R = testutil::ring({"x", "y"});
  auto f = ext_modules(cyclic(R, {}));
  CHECK(f[0] == cyclic(R, {}));
  CHECK(f[1].is_zero());
  CHECK(f[2].is_zero());

  auto g = ext_modules(cyclic(R, {"x*y"}));
  CHECK(g[0].is_zero());
  CHECK(g[1].rank() == 1);
  CHECK(quotient_dimension(g[1]) == 1);
  CHECK(hilbert_series(g[1]).reduced().numerator == V{1, 1});
  CHECK(g[2].is_zero());
}

TEST_CASE("duals of local cohomology") {
  auto R = testutil::ring({"x", "y"});
  auto L = local_cohomology_duals(cyclic(R, {"x*y"}));
  CHECK(L.depth == 1);
  CHECK(L.dims == I{kDimZeroModule, 1, kDimZeroModule});

  auto LM = local_cohomology_duals(cyclic(R, {"x^2", "x*y"}));
  CHECK(LM.depth == 0);
  CHECK(quotient_length(LM.duals[0]) == 1);

  auto U = testutil::ring({"x1", "x2", "y1", "y2", "z"});
  auto L39 = local_cohomology_duals(cyclic(U, {"x1*y1", "x1*y2", "x2*y1", "x2*y2"}));
  CHECK(L39.dim == 3);
  CHECK(L39.depth == 2);
  CHECK(L39.dims[2] == 1);
  CHECK(L39.dims[0] == kDimZeroModule);
  CHECK(L39.dims[1] == kDimZeroModule);
}

TEST_CASE("koszul homology") {
  auto R = testutil::ring({"x", "y"});
  CHECK(koszul_homology_lengths(ideal(R, {"x", "y"}), cyclic(R, {})) == V{0, 0});
  CHECK(koszul_homology_lengths(ideal(R, {"x-y"}), cyclic(R, {"x*y"})) == V{0});
  CHECK(koszul_homology_lengths(ideal(R, {"y"}), cyclic(R, {"x^2", "x*y"})) == V{1});
  CHECK_THROWS_AS(koszul_homology_lengths(ideal(R, {"x"}), cyclic(R, {})), InputError);
}

TEST_CASE("first euler characteristic") {
  auto R = testutil::ring({"x", "y"});
  CHECK(euler_char_1(ideal(R, {"x", "y"}), cyclic(R, {})) == 0);
  auto U = testutil::ring({"x1", "x2", "y1", "y2", "z"});
  auto A39 = cyclic(U, {"x1*y1", "x1*y2", "x2*y1", "x2*y2"});
  CHECK(euler_char_1(ideal(U, {"x1-y1", "x2-y2", "z"}), A39) == 1);
  auto T = testutil::ring({"x", "y", "z"});
  for (int l = 1; l <= 3; ++l) {
    std::string y = "y^" + std::to_string(l);
    CHECK(euler_char_1(ideal(T, {"x-y", "x-z"}), cyclic(T, {"x*" + y, "x*z"})) == 1);
  }
}
