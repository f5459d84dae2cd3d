// Serial vs OpenMP batch gradient on the path task defaults.

#include <benchmark/benchmark.h>

#include <numeric>

#include "nesydm/config.hpp"
#include "nesydm/trainer.hpp"
#include "nesydm/training.hpp"

using namespace nesydm;

namespace {

struct Fixture {
  RunConfig config = default_config(TaskKind::path);
  TaskData task;
  UnmaskingModel model;
  std::vector<std::size_t> batch;

  Fixture() {
    config.task.n_train = 64;
    config.task.n_test = 1;
    task = build_task(config);
    model = initial_model(config, task.train);
    batch.resize(config.optim.batch_size);
    std::iota(batch.begin(), batch.end(), 0);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void run(benchmark::State& state, Execution exec) {
  const auto& f = fixture();
  std::uint64_t k = 0;
  for (auto _ : state) {
    auto g = batch_gradient(f.model, f.task.train, f.batch, *f.task.program, f.config.loss, f.config.hyper,
                            NoisingSchedule{}, Rng(++k), exec);
    benchmark::DoNotOptimize(g.grad.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.batch.size()));
}

void BM_BatchGradientSerial(benchmark::State& state) { run(state, Execution::serial); }
void BM_BatchGradientParallel(benchmark::State& state) { run(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_BatchGradientSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchGradientParallel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
