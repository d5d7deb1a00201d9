#include <benchmark/benchmark.h>

#include "hdeg/cli/report.hpp"
#include "hdeg/parse.hpp"
#include "hdeg/verify.hpp"

using namespace hdeg;

namespace {

IdealGens polys(const RingPtr& R, std::initializer_list<const char*> v) {
  IdealGens out;
  for (const char* s : v) out.push_back(parse_polynomial(R, s));
  return out;
}

void BM_GroebnerCyclic4(benchmark::State& st) {
  auto R = make_ring(Field::prime(32003), {"a", "b", "c", "d", "h"});
  auto I = polys(R, {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-h^4"});
  auto F = make_free_module(R, {0});
  for (auto _ : st) benchmark::DoNotOptimize(groebner_basis(ideal_as_submodule(I, F)).size());
}
BENCHMARK(BM_GroebnerCyclic4)->Unit(benchmark::kMillisecond);

void BM_SamuelEx39(benchmark::State& st) {
  auto P = gen_example_39(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    SamuelFunction f(P.module, P.params);
    benchmark::DoNotOptimize(f.at(8));
  }
}
BENCHMARK(BM_SamuelEx39)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_LocalCohomologyEx39(benchmark::State& st) {
  auto P = gen_example_39(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(local_cohomology_duals(P.module).depth);
}
BENCHMARK(BM_LocalCohomologyEx39)->Args({2, 1})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_ReportEx46(benchmark::State& st) {
  auto P = gen_example_46(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    InvariantSession s;
    benchmark::DoNotOptimize(s.report(P.module, P.params).hdeg);
  }
}
BENCHMARK(BM_ReportEx46)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Theorem1Ex39(benchmark::State& st) {
  auto P = gen_example_39(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) {
    InvariantSession s;
    benchmark::DoNotOptimize(check_thm1(P, s).condition1);
  }
}
BENCHMARK(BM_Theorem1Ex39)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_KoszulEx46(benchmark::State& st) {
  auto P = gen_example_46(3);
  for (auto _ : st) benchmark::DoNotOptimize(koszul_homology_lengths(P.params, P.module));
}
BENCHMARK(BM_KoszulEx46)->Unit(benchmark::kMicrosecond);

void BM_ParseScript(benchmark::State& st) {
  const std::string text =
      "ring S = QQ[x,y,z];\n"
      "ideal J = intersect((x), (power((y), 3), z));\n"
      "algebra A = S / J;\n"
      "module M = coker [[x, 0, y^2], [0, z, x]] twists (0, 1);\n"
      "params Q = (x - y, x - z);\n"
      "check invariants;\n";
  for (auto _ : st) benchmark::DoNotOptimize(cli::parse_input(text).statements.size());
}
BENCHMARK(BM_ParseScript)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
