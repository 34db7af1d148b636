#include <benchmark/benchmark.h>

#include "ramify/numono.hpp"

using namespace ramify;

static void BM_TrackMonodromy(benchmark::State &state, char const *text, Precision precision)
{
  auto p = parse_poly(text);
  TrackingConfig cfg;
  cfg.precision = precision;
  cfg.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(track_monodromy(p, cfg));
}
BENCHMARK_CAPTURE(BM_TrackMonodromy, cusp_cubic, "y^3 - 3*y + x", Precision::double_precision);
BENCHMARK_CAPTURE(BM_TrackMonodromy, sheared_cubic, "(x + y/3)^3 + y^3 - 1",
                  Precision::double_precision);
BENCHMARK_CAPTURE(BM_TrackMonodromy, sheared_cubic_quad, "(x + y/3)^3 + y^3 - 1",
                  Precision::quad_precision);
BENCHMARK_CAPTURE(BM_TrackMonodromy, quartic, "y^4 + x*y + x^3 - 1", Precision::double_precision);

static void BM_CriticalValues(benchmark::State &state)
{
  auto p = parse_poly("y^5 + 3*x*y^2 - x^4*y + x^5 - 7");
  for (auto _ : state)
    benchmark::DoNotOptimize(critical_values(p));
}
BENCHMARK(BM_CriticalValues);
BENCHMARK_MAIN();
