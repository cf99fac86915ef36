#include <benchmark/benchmark.h>

#include "qg/lie.hpp"
#include "qg/random.hpp"

namespace {

const char* kGroups[] = {"Z2", "S3", "D4", "Z2xS3", "S4"};

qg::QGBundle bundle(const benchmark::State& st) {
  return qg::build_commutative(qg::build_standard(qg::parse_group_spec(kGroups[st.range(0)])));
}

template <class F>
void run(benchmark::State& st, F product) {
  const qg::QGBundle b = bundle(st);
  qg::Sampler s(1);
  const qg::CMatrix x = s.trace_zero(b.d), y = s.trace_zero(b.d);
  for (auto _ : st) benchmark::DoNotOptimize(product(b, x, y));
  st.SetLabel(kGroups[st.range(0)]);
}

void BM_Star(benchmark::State& st) { run(st, qg::star); }
void BM_Bullet(benchmark::State& st) { run(st, qg::bullet); }
void BM_Ostar(benchmark::State& st) { run(st, qg::ostar); }

}  // namespace

BENCHMARK(BM_Star)->DenseRange(0, 4);
BENCHMARK(BM_Bullet)->DenseRange(0, 4);
BENCHMARK(BM_Ostar)->DenseRange(0, 4);

BENCHMARK_MAIN();
