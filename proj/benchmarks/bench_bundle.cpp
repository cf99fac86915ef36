#include <benchmark/benchmark.h>

#include "qg/bundle.hpp"
#include "qg/multipliers.hpp"

namespace {

qg::FiniteGroup group(const char* s) { return qg::build_standard(qg::parse_group_spec(s)); }

void BM_ValidateQG(benchmark::State& st) {
  const char* names[] = {"Z2", "S3", "D4", "S4"};
  const qg::QGBundle b = qg::build_commutative(group(names[st.range(0)]));
  for (auto _ : st) benchmark::DoNotOptimize(qg::validate_qg(b));
  st.SetLabel(names[st.range(0)]);
}

void BM_ModuleMapDim(benchmark::State& st) {
  const char* names[] = {"Z2", "Z3", "Z4", "S3"};
  const qg::QGBundle b = qg::build_commutative(group(names[st.range(0)]));
  for (auto _ : st) benchmark::DoNotOptimize(qg::module_map_space_dim(b, qg::Side::left, {1e-8, false}));
  st.SetLabel(names[st.range(0)]);
}

}  // namespace

BENCHMARK(BM_ValidateQG)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModuleMapDim)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
