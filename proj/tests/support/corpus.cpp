#include "corpus.hpp"

#include "hdeg/parse.hpp"

namespace corpus {

namespace {

hdeg::IdealGens polys(const hdeg::RingPtr& ring, const std::vector<std::string>& v) {
  hdeg::IdealGens out;
  for (const auto& s : v) out.push_back(hdeg::parse_polynomial(ring, s));
  return out;
}

hdeg::RingPtr qq(std::vector<std::string> names) { return hdeg::make_ring(hdeg::Field::rationals(), std::move(names)); }

}  // namespace

hdeg::ProblemInstance cyclic_instance(const std::string& name, const hdeg::RingPtr& ring, const std::vector<std::string>& J,
                                      const std::vector<std::string>& Q) {
  hdeg::ProblemInstance P;
  P.name = name;
  P.family = "custom";
  P.ring = ring;
  P.defining_ideal = polys(ring, J);
  P.module = hdeg::Presentation::quotient_ring(ring, P.defining_ideal);
  P.params = polys(ring, Q);
  return P;
}

hdeg::ProblemInstance module_instance(const std::string& name, const hdeg::RingPtr& ring, const std::vector<int>& twists,
                                      const std::vector<std::vector<std::string>>& relations, const std::vector<std::string>& Q) {
  hdeg::ProblemInstance P;
  P.name = name;
  P.family = "custom";
  P.ring = ring;
  auto F = hdeg::make_free_module(ring, twists);
  std::vector<hdeg::FreeElement> rels;
  for (const auto& col : relations) {
    hdeg::FreeElement e(F);
    for (std::size_t i = 0; i < col.size(); ++i)
      e = e + hdeg::FreeElement::from_polynomial(F, static_cast<int>(i), hdeg::parse_polynomial(ring, col[i]));
    rels.push_back(e);
  }
  P.module = hdeg::Presentation(F, rels);
  P.params = polys(ring, Q);
  return P;
}

std::vector<hdeg::ProblemInstance> instances() {
  std::vector<hdeg::ProblemInstance> out;
  out.push_back(hdeg::gen_example_39(2, 1));
  out.push_back(hdeg::gen_example_39(3, 1));
  out.push_back(hdeg::gen_example_39(2, 2));
  for (int l = 1; l <= 3; ++l) out.push_back(hdeg::gen_example_46(l));
  out.push_back(hdeg::gen_example_46(2, hdeg::Field::prime(32003)));
  out.push_back(hdeg::gen_example_39(2, 1, hdeg::Field::prime(32003)));

  auto xy = qq({"x", "y"});
  auto xyz = qq({"x", "y", "z"});
  auto xyzw = qq({"x", "y", "z", "w"});
  auto abcd = qq({"a", "b", "c", "d"});

  // Cohen-Macaulay controls
  out.push_back(cyclic_instance("k[x,y]", xy, {}, {"x", "y"}));
  out.push_back(cyclic_instance("k[x,y,z]", xyz, {}, {"x", "y", "z"}));
  out.push_back(cyclic_instance("k[x,y]/(xy)", xy, {"x*y"}, {"x-y"}));
  out.push_back(cyclic_instance("quadric cone", xyz, {"x^2+y^2+z^2"}, {"x", "y"}));
  out.push_back(cyclic_instance("three lines", xyz, {"x*y", "y*z", "x*z"}, {"x+y+z"}));
  out.push_back(cyclic_instance("twisted cubic", abcd, {"a*c-b^2", "b*d-c^2", "a*d-b*c"}, {"a", "d"}));
  out.push_back(module_instance("S + S(-1)", xy, {0, 1}, {}, {"x", "y"}));
  out.push_back(cyclic_instance("k[x,y]/(x^2) over (x+y)", xy, {"x^2"}, {"x+y"}));

  // low depth
  out.push_back(cyclic_instance("k[x,y]/(x^2,xy)", xy, {"x^2", "x*y"}, {"y"}));
  out.push_back(cyclic_instance("k[x,y]/(x^3,x^2y)", xy, {"x^3", "x^2*y"}, {"y"}));
  out.push_back(cyclic_instance("k[x,y,z]/(x^2,xy,xz)", xyz, {"x^2", "x*y", "x*z"}, {"y", "z"}));
  out.push_back(cyclic_instance("k[x,y,z]/(x^2,xy)", xyz, {"x^2", "x*y"}, {"y", "z"}));
  out.push_back(cyclic_instance("two planes", xyzw, {"x*z", "x*w", "y*z", "y*w"}, {"x+z", "y+w"}));
  out.push_back(cyclic_instance("k[x,y,z]/(x^2y,xy^2)", xyz, {"x^2*y", "x*y^2"}, {"z", "x-y"}));
  out.push_back(module_instance("S/(x) + S/(y,z)", xyz, {0, 0}, {{"x", "0"}, {"0", "y"}, {"0", "z"}}, {"x+y", "x+z"}));
  out.push_back(module_instance("S(-1) + S/(x^2,xy)", xy, {1, 0}, {{"0", "x^2"}, {"0", "x*y"}}, {"x", "y"}));
  return out;
}

}  // namespace corpus
