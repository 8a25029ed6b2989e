#include <benchmark/benchmark.h>

#include "g2qm/hypnum/theta.hpp"
#include "g2qm/igusa/igusa.hpp"
#include "g2qm/io/json_io.hpp"
#include "g2qm/pollab/polarization.hpp"
#include "g2qm/richelot/richelot.hpp"

using namespace g2qm;

namespace {

const CurveFile& level243() {
  static CurveFile cf = read_curve_file(std::string(G2QM_DATA_DIR) + "/curve_243.json");
  return cf;
}

void BM_Roots(benchmark::State& st) {
  int p = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(find_roots(level243().curve, p));
}
BENCHMARK(BM_Roots)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_PeriodMatrix(benchmark::State& st) {
  int p = static_cast<int>(st.range(0));
  auto bp = find_roots(level243().curve, p);
  for (auto _ : st) benchmark::DoNotOptimize(build_period_matrix(bp, level243().loops, p));
}
BENCHMARK(BM_PeriodMatrix)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_ThetaConstants(benchmark::State& st) {
  int p = static_cast<int>(st.range(0));
  auto pm = build_period_matrix(level243().curve, std::nullopt, p);
  auto red = siegel_reduce(small_period_matrix(pm.omega, p));
  for (auto _ : st)
    for (const auto& ch : even_characteristics()) benchmark::DoNotOptimize(theta_constant(ch, red.tau, p));
}
BENCHMARK(BM_ThetaConstants)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_IgusaExact(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(absolute_invariants(igusa_clebsch(level243().curve.poly())));
}
BENCHMARK(BM_IgusaExact)->Unit(benchmark::kMillisecond);

void BM_RichelotTable(benchmark::State& st) {
  ReconstructConfig cfg;
  for (auto _ : st) benchmark::DoNotOptimize(richelot_table(level243().curve, cfg));
}
BENCHMARK(BM_RichelotTable)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_PrincipalSearch(benchmark::State& st) {
  const char* files[] = {"/af243.json", "/af1568.json"};
  auto lat = read_lattice_file(std::string(G2QM_DATA_DIR) + files[st.range(0)]);
  auto inv = rosati_involution(lat.action, lat.form);
  for (auto _ : st) benchmark::DoNotOptimize(principal_search(lat, inv));
}
BENCHMARK(BM_PrincipalSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
