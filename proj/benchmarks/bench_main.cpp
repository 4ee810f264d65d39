#include <benchmark/benchmark.h>

#include <random>

#include "tensortomo/opcalc.hpp"
#include "tensortomo/raykit.hpp"
#include "tensortomo/spherecalc.hpp"
#include "tensortomo/testfields.hpp"

using namespace tt;

namespace {

VolumeField gaussian_volume(int m, int N) {
  std::mt19937_64 rng(11);
  return sample_volume(curl_field(m, random_gauss_poly(2, 2, rng)), 8.0, N);
}

void BM_AOperator(benchmark::State& st) {
  const int m = 2, r = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (int l = 0; l <= r; ++l) benchmark::DoNotOptimize(a_operator(m, r, l));
}
BENCHMARK(BM_AOperator)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_FourierVolume(benchmark::State& st) {
  VolumeField f = gaussian_volume(1, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(fourier_volume(f));
}
BENCHMARK(BM_FourierVolume)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RayTransform(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  VolumeField f = gaussian_volume(1, N);
  LineGrid g;
  g.directions = N;
  g.offsets = N;
  for (auto _ : st) benchmark::DoNotOptimize(ray_transform(f, g));
}
BENCHMARK(BM_RayTransform)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DeltaXi(benchmark::State& st) {
  VolumeField f = gaussian_volume(1, 128);
  LineGrid g;
  g.directions = 256;
  g.offsets = 256;
  RaySample phi = ray_transform(f, g);
  for (auto _ : st) benchmark::DoNotOptimize(delta_xi_power(phi, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_DeltaXi)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ApplyNCPoly(benchmark::State& st) {
  GridPtr g = SphereGrid::sphere(static_cast<int>(st.range(0)));
  const int m = 2;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  TangentField f(g, m);
  for (int i = 0; i < f.values.rows(); ++i)
    for (int c = 0; c < f.values.cols(); ++c) f.values(i, c) = cplx(nd(rng), nd(rng));
  f = tangential_project(f);
  const NCPoly p = specialize(a_operator(m, 1, 1), 3);
  for (auto _ : st) benchmark::DoNotOptimize(apply_ncpoly(p, f));
}
BENCHMARK(BM_ApplyNCPoly)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
