#include <benchmark/benchmark.h>

#include "intcomb/asm.hpp"
#include "intcomb/geodesic.hpp"
#include "intcomb/lorentzian.hpp"
#include "intcomb/macdonald.hpp"
#include "intcomb/operators.hpp"
#include "intcomb/qdet.hpp"
#include "intcomb/whittaker.hpp"

using namespace intcomb;

static void BM_AsmEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long c = 0;
    asms::for_each_asm(n, [&](const asms::Asm&) { ++c; });
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_AsmEnumerate)->DenseRange(4, 6);

static void BM_LambdaDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asms::lambda_det_identity(n).pass);
}
BENCHMARK(BM_LambdaDet)->DenseRange(3, 5);

static void BM_Genfun(benchmark::State& state) {
  const lorentzian::LorentzParams p{Rational(1, 10), Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(lorentzian::genfun_check(p, static_cast<int>(state.range(0))).pass);
}
BENCHMARK(BM_Genfun)->Arg(6)->Arg(10);

static void BM_Commutation(benchmark::State& state) {
  using namespace lorentzian;
  const LorentzParams p{Rational(1, 10), Rational(1, 2)};
  const auto c = conjugate_parameter(p, Rational(2, 3)).params();
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commutation_residual(TransferParams::from_exact(p), c, size, 10).pass);
}
BENCHMARK(BM_Commutation)->Arg(20)->Arg(40);

static void BM_GeodesicFamily(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(geodesic::build_family(8, order).rn.size());
}
BENCHMARK(BM_GeodesicFamily)->Arg(12)->Arg(20);

static void BM_WhittakerA2(benchmark::State& state) {
  using namespace whittaker;
  const auto cd = CartanData::type_a(2);
  const HighestWeight hw{parse_rational_list("5/7,3/2"), parse_rational_list("1,1")};
  for (auto _ : state) benchmark::DoNotOptimize(whittaker_defect(cd, hw, static_cast<int>(state.range(0))).pass);
}
BENCHMARK(BM_WhittakerA2)->DenseRange(2, 4);

static void BM_DifferenceOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = monomial_symmetric<RationalFunction>({2, 1}, n);
  for (auto _ : state) benchmark::DoNotOptimize(qsystem::mac_apply(1, 1, f).is_zero());
}
BENCHMARK(BM_DifferenceOperator)->DenseRange(2, 3);

static void BM_Qdet(benchmark::State& state) {
  const std::vector<int> a(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qsystem::quantum_determinant(a, 3, 2).pass);
}
BENCHMARK(BM_Qdet)->DenseRange(2, 3);
BENCHMARK_MAIN();
