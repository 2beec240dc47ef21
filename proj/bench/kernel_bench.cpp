// Serial reference kernels vs the OpenMP kernels, plus the per-batch
// forward/backward fan-out. On a single core the two paths should tie.

#include <benchmark/benchmark.h>

#include "ocrlm/dataset.hpp"
#include "ocrlm/kernels.hpp"
#include "ocrlm/rng.hpp"
#include "ocrlm/trainer.hpp"

using namespace ocrlm;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

// Shapes from a 256-unit recurrent layer over a 300-step line.
constexpr std::size_t kM = 300, kK = 256, kN = 1024;

template <auto Kernel>
void matmul_case(benchmark::State& state, std::size_t m, std::size_t k, std::size_t n,
                 std::size_t out) {
  const auto a = random_vec(m * k, 1), b = random_vec(k * n, 2);
  std::vector<double> c(out);
  for (auto _ : state) {
    Kernel(a.data(), b.data(), c.data(), m, k, n, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m * k * n));
}

void BM_matmul_serial(benchmark::State& s) { matmul_case<kernels::matmul_reference>(s, kM, kK, kN, kM * kN); }
void BM_matmul_parallel(benchmark::State& s) { matmul_case<kernels::matmul>(s, kM, kK, kN, kM * kN); }
void BM_matmul_tn_serial(benchmark::State& s) { matmul_case<kernels::matmul_tn_reference>(s, kM, kK, kN, kK * kN); }
void BM_matmul_tn_parallel(benchmark::State& s) { matmul_case<kernels::matmul_tn>(s, kM, kK, kN, kK * kN); }

void batch_case(benchmark::State& state, bool parallel) {
  net::ModelConfig cfg;
  cfg.lstm_layers = 1;
  cfg.lstm_units = 64;
  const net::Network n(cfg, net::init_params(cfg, 1));
  const ctc::Alphabet alpha;
  std::vector<data::RawLine> lines;
  for (const char* t : {"the quick brown fox", "jumps over", "the lazy dog", "pack my box",
                        "with five dozen", "liquor jugs", "sphinx of black quartz", "judge my vow"})
    lines.push_back(data::RawLine::from_image(render::render_line(t, render::builtin_fonts().find("plain"), 12)));
  std::vector<const data::RawLine*> batch;
  for (const auto& l : lines) batch.push_back(&l);
  for (auto _ : state) benchmark::DoNotOptimize(net::batch_gradient(n, alpha, batch, 1, parallel));
}

void BM_batch_gradient_serial(benchmark::State& s) { batch_case(s, false); }
void BM_batch_gradient_parallel(benchmark::State& s) { batch_case(s, true); }

}  // namespace

BENCHMARK(BM_matmul_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_tn_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_tn_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_gradient_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_gradient_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
