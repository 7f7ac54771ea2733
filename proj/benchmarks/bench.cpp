#include <benchmark/benchmark.h>

#include <span>

#include <qorbit/classifier.hpp>
#include <qorbit/patch.hpp>

namespace {

using namespace qorbit;

void BM_ClassifyExact(benchmark::State& state) {
  const auto s = kAllStrata[static_cast<std::size_t>(state.range(0))];
  const ProjectivePoint<Rational> p(representative(s));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
  state.SetLabel(std::string(to_string(s)));
}
BENCHMARK(BM_ClassifyExact)->DenseRange(0, 10);

void BM_ClassifyFloat(benchmark::State& state) {
  const auto s = kAllStrata[static_cast<std::size_t>(state.range(0))];
  const ProjectivePoint<double> p(act(random_element(1, 0.7), to_double(representative(s))));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
  state.SetLabel(std::string(to_string(s)));
}
// EIN_OPEN (index 2) has no float representative off the boundary band.
BENCHMARK(BM_ClassifyFloat)->Arg(0)->Arg(1)->DenseRange(3, 10);

void BM_GramSignatureExact(benchmark::State& state) {
  const auto t = orbit_tangent_basis(representative(Stratum::HTwoRealPair));
  for (auto _ : state) benchmark::DoNotOptimize(gram_signature(std::span<const QuarticForm<Rational>>(t.data(), t.size())));
}
BENCHMARK(BM_GramSignatureExact);

void BM_ActFloat(benchmark::State& state) {
  const auto g = random_element(2, 1.0);
  QuarticForm<double> f(1, -2, 3, 0.5, 1);
  for (auto _ : state) {
    f = unit_normalized(act(g, f));
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_ActFloat);

void BM_ActExact(benchmark::State& state) {
  GroupSampler sampler(3);
  const auto g = sampler.next_rational();
  const QuarticForm<Rational> f(Rational(1), Rational(-2), Rational(3), Rational(1, 2), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(act(g, f));
}
BENCHMARK(BM_ActExact);

void BM_SampleSurface(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_surface_L(kDefaultWindow, kDefaultWindow, n, n));
}
BENCHMARK(BM_SampleSurface)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
