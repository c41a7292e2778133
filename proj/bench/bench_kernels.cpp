// Serial reference against the OpenMP path for the heavy kernels.
#include <benchmark/benchmark.h>

#include "mcqc/bilinear.hpp"
#include "mcqc/fock.hpp"
#include "mcqc/partfun.hpp"
#include "mcqc/qcurve.hpp"

using namespace mcqc;

namespace {

const QParam& qp() {
  static const QParam q(Scalar(2, 3));
  return q;
}

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Z5dX(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(z5d_x(5, qp(), mode(st)));
}

void BM_QcurveResidual(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(qcurve_residual(4, qp(), mode(st)));
}

void BM_KacSchwarz(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kac_schwarz_check(2, 8, 2, qp(), mode(st)));
}

void BM_GState(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_g_state(GState::G2Prime, 4, 4, qp(), mode(st)));
}

void BM_Fay4Grid4D(benchmark::State& st) {
  BilinearConfig cfg;
  cfg.ncut = 3;
  for (auto _ : st) benchmark::DoNotOptimize(fay4_4d_certified(cfg, mode(st)));
}

}  // namespace

// Arg 0 is the serial reference, arg 1 the OpenMP path.
BENCHMARK(BM_Z5dX)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QcurveResidual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KacSchwarz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GState)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fay4Grid4D)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
