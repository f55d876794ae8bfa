#include <benchmark/benchmark.h>

#include <vector>

#include "partmon/algos.hpp"
#include "partmon/core.hpp"
#include "partmon/harness.hpp"
#include "partmon/oracle.hpp"
#include "partmon/precedence.hpp"
#include "partmon/rng.hpp"

using namespace partmon;

namespace {

Instance make_instance(std::size_t n, std::size_t m, std::uint64_t seed = 1) {
    SplitMix64 rng(seed);
    std::vector<Value> values(n);
    for (auto& v : values) v = rng.bounded(1, 1000);
    return Instance(std::move(values), m);
}

SumVector make_sums(std::size_t m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SumVector sums(m);
    for (auto& s : sums) s = rng.bounded(0, 1000);
    return sums;
}

PrecedenceInstance make_dag(std::size_t n, std::size_t m) {
    SplitMix64 rng(3);
    std::vector<Job> jobs;
    std::vector<std::vector<std::size_t>> deps(n);
    for (std::size_t i = 0; i < n; ++i) {
        jobs.push_back({"j" + std::to_string(i), rng.bounded(1, 100)});
        for (std::size_t d = i > 8 ? i - 8 : 0; d < i; ++d)
            if (rng.bounded(0, 3) == 0)
                deps[i].push_back(d);
    }
    return PrecedenceInstance(std::move(jobs), std::move(deps), m);
}

}  // namespace

static void BM_RunLs(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ls(inst));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunLs)->Arg(16)->Arg(256)->Arg(4096);

static void BM_RunLpt(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_lpt(inst));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunLpt)->Arg(16)->Arg(256)->Arg(4096);

static void BM_RunFfd(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0), 8);
    const Value capacity = (inst.total() + 7) / 8 + 1000;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ffd(inst.values(), capacity));
}
BENCHMARK(BM_RunFfd)->Arg(16)->Arg(256)->Arg(4096);

static void BM_RunMultifit(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_multifit(inst));
}
BENCHMARK(BM_RunMultifit)->Arg(16)->Arg(256)->Arg(1024);

static void BM_Dominates(benchmark::State& state) {
    const SumVector s = make_sums(state.range(0), 5);
    const SumVector t = make_sums(state.range(0), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(dominates(s, t));
}
BENCHMARK(BM_Dominates)->Arg(8)->Arg(64)->Arg(512);

static void BM_DominatesBruteforce(benchmark::State& state) {
    const SumVector s = make_sums(state.range(0), 5);
    const SumVector t = make_sums(state.range(0), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::dominates_bruteforce(s, t));
}
BENCHMARK(BM_DominatesBruteforce)->Arg(4)->Arg(6)->Arg(8);

static void BM_ScheduleEvent(benchmark::State& state) {
    const PrecedenceInstance inst = make_dag(state.range(0), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(schedule(inst, DispatchPolicy::event_driven));
}
BENCHMARK(BM_ScheduleEvent)->Arg(16)->Arg(256)->Arg(1024);

static void BM_ScheduleListOrder(benchmark::State& state) {
    const PrecedenceInstance inst = make_dag(state.range(0), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(schedule(inst, DispatchPolicy::list_order));
}
BENCHMARK(BM_ScheduleListOrder)->Arg(16)->Arg(256)->Arg(1024);

static void BM_CheckValueMonotone(benchmark::State& state) {
    const Instance inst = make_instance(12, 4);
    const harness::Perturbation pert{3, 7};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            harness::check_value_monotone(harness::Algo::ls, inst, pert));
}
BENCHMARK(BM_CheckValueMonotone);

static void BM_SearchTrials(benchmark::State& state) {
    harness::SearchConfig cfg;
    cfg.algorithm = harness::Algo::ls;
    cfg.seed = 42;
    cfg.trials = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(harness::search_anomalies(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchTrials)->Arg(100)->Arg(1000);

static void BM_OptimalPartition(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oracle::optimal_partition(inst, oracle::Objective::min_max));
}
BENCHMARK(BM_OptimalPartition)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
