#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "partmon/algos.hpp"
#include "partmon/core.hpp"
#include "partmon/harness.hpp"
#include "partmon/precedence.hpp"
#include "partmon/rng.hpp"

using namespace partmon;
using harness::Algo;
using harness::Condition;
using harness::Verdict;

namespace {

const Instance kMultifitBase({44, 24, 24, 22, 21, 16, 8, 8, 6, 6}, 3);

bool has(const std::vector<Condition>& cs, Condition c) {
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

PrecedenceInstance anomaly_dag(std::size_t machines) {
    std::vector<Job> jobs;
    const char* ids[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
    const Value times[] = {30, 21, 22, 20, 40, 40, 40, 40, 90};
    for (std::size_t i = 0; i < 9; ++i)
        jobs.push_back({ids[i], times[i]});
    std::vector<std::vector<std::size_t>> deps(9);
    deps[4] = deps[5] = deps[6] = deps[7] = {3};
    return PrecedenceInstance(std::move(jobs), std::move(deps), machines);
}

}  // namespace

TEST_CASE("algo names round-trip") {
    for (Algo a : {Algo::ls, Algo::lpt, Algo::multifit})
        CHECK(harness::parse_algo(harness::to_string(a)) == a);
    CHECK_FALSE(harness::parse_algo("bogus").has_value());
    CHECK_FALSE(harness::parse_algo("LS").has_value());
}

TEST_CASE("condition names are the hyphenated forms the cli prints") {
    CHECK(harness::to_string(Condition::max_decreased) == "max-decreased");
    CHECK(harness::to_string(Condition::min_decreased) == "min-decreased");
    CHECK(harness::to_string(Condition::no_domination) == "no-domination");
    CHECK(harness::to_string(Condition::max_increased) == "max-increased");
    CHECK(harness::to_string(Condition::min_increased) == "min-increased");
}

TEST_CASE("sums_of dispatches to the right algorithm") {
    const Instance inst({18, 10, 6, 4}, 2);
    CHECK(harness::sums_of(Algo::ls, inst) == run_ls(inst).partition.sums);
    CHECK(harness::sums_of(Algo::lpt, inst) == run_lpt(inst).partition.sums);
    CHECK(harness::sums_of(Algo::multifit, kMultifitBase) ==
          run_multifit(kMultifitBase).partition.sums);
}

TEST_CASE("value check passes on the ls example") {
    const Instance inst({18, 10, 6, 4}, 2);
    const auto r = harness::check_value_monotone(Algo::ls, inst, {2, 3});
    CHECK(r.verdict() == Verdict::pass);
    CHECK(r.violated_conditions.empty());
    CHECK(r.before_sums == SumVector{18, 20});
    CHECK(r.after_sums == SumVector{22, 19});
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->valid_for(r.after_sums, r.before_sums));
    CHECK(r.algorithm == "ls");
    CHECK(r.m == 2);
    CHECK(r.values == std::vector<Value>{18, 10, 6, 4});
}

TEST_CASE("value check flags the multifit counterexample") {
    const auto r = harness::check_value_monotone(Algo::multifit, kMultifitBase, {5, 1});
    CHECK(r.verdict() == Verdict::violation);
    CHECK(r.before_sums == SumVector{60, 62, 57});
    CHECK(r.after_sums == SumVector{60, 60, 60});
    CHECK_FALSE(r.witness.has_value());
    CHECK(has(r.violated_conditions, Condition::max_decreased));
    CHECK(has(r.violated_conditions, Condition::no_domination));
    CHECK_FALSE(has(r.violated_conditions, Condition::min_decreased));
}

TEST_CASE("the flagged decrease is symmetric to an increase in reverse") {
    // Walking the same edge backward (17 -> 16 is a decrease) must raise
    // the max sum by the same amount the forward direction dropped it.
    const Instance increased = kMultifitBase.with_increase(5, 1);
    const SumVector before = harness::sums_of(Algo::multifit, kMultifitBase);
    const SumVector after = harness::sums_of(Algo::multifit, increased);
    const Value drop = *std::max_element(before.begin(), before.end()) -
                       *std::max_element(after.begin(), after.end());
    CHECK(drop == 2);
}

TEST_CASE("value check rejects bad perturbations") {
    const Instance inst({18, 10, 6, 4}, 2);
    CHECK_THROWS_AS(harness::check_value_monotone(Algo::ls, inst, {0, 0}), InputError);
    CHECK_THROWS_AS(harness::check_value_monotone(Algo::ls, inst, {4, 1}), InputError);
}

TEST_CASE("multi-coordinate increases keep ls and lpt monotone") {
    SplitMix64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.bounded(1, 12);
        const std::size_t m = rng.bounded(2, 5);
        std::vector<Value> values(n), raised(n);
        for (std::size_t i = 0; i < n; ++i) {
            values[i] = rng.bounded(1, 100);
            raised[i] = values[i] + rng.bounded(0, 10);
        }
        raised[rng.bounded(0, n - 1)] += 1;  // guarantee one strict increase
        const Instance x(values, m), x_prime(raised, m);
        for (Algo algo : {Algo::ls, Algo::lpt}) {
            const auto r = harness::check_multi_increase(algo, x, x_prime);
            CHECK(r.verdict() == Verdict::pass);
            CHECK(r.witness.has_value());
        }
    }
}

TEST_CASE("a multi-increase dominates through every single-step stage") {
    // Raising coordinates one at a time chains domination witnesses from
    // x all the way to x'; the direct comparison must agree.
    const Instance x({18, 10, 6, 4}, 2);
    const Instance x1 = x.with_increase(2, 3);
    const Instance x2 = x1.with_increase(0, 2);

    const SumVector s0 = harness::sums_of(Algo::ls, x);
    const SumVector s1 = harness::sums_of(Algo::ls, x1);
    const SumVector s2 = harness::sums_of(Algo::ls, x2);
    CHECK(dominates(s1, s0).has_value());
    CHECK(dominates(s2, s1).has_value());
    CHECK(dominates(s2, s0).has_value());

    const auto r = harness::check_multi_increase(Algo::ls, x, x2);
    CHECK(r.verdict() == Verdict::pass);
    CHECK(r.after_sums == s2);
}

TEST_CASE("multi-increase validates shapes") {
    const Instance x({5, 5}, 2);
    CHECK_THROWS_AS(harness::check_multi_increase(Algo::ls, x, Instance({5, 5, 5}, 2)),
                    InputError);
    CHECK_THROWS_AS(harness::check_multi_increase(Algo::ls, x, Instance({5, 4}, 2)),
                    InputError);
    CHECK_THROWS_AS(harness::check_multi_increase(Algo::ls, x, Instance({5, 5}, 2)),
                    InputError);  // nothing strictly increased
    CHECK_THROWS_AS(harness::check_multi_increase(Algo::ls, x, Instance({5, 6}, 3)),
                    InputError);  // bin counts differ
}

TEST_CASE("bin-count check on a tiny ls instance") {
    const auto r = harness::check_count_monotone(Algo::ls, Instance({1, 1, 1}, 2), 3);
    CHECK(r.verdict() == Verdict::pass);
    CHECK(r.before_sums == SumVector{2, 1});
    CHECK(r.after_sums == SumVector{1, 1, 1});
    CHECK_FALSE(r.witness.has_value());
    CHECK(std::holds_alternative<harness::CountChange>(r.change));
}

TEST_CASE("bin-count check validates m2") {
    const Instance inst({1, 1, 1}, 2);
    CHECK_THROWS_AS(harness::check_count_monotone(Algo::ls, inst, 2), InputError);
    CHECK_THROWS_AS(harness::check_count_monotone(Algo::ls, inst, 1), InputError);
}

TEST_CASE("machine-count check flags the dag anomaly") {
    const auto r = harness::check_count_monotone(anomaly_dag(3),
                                                 DispatchPolicy::event_driven, 4);
    CHECK(r.verdict() == Verdict::violation);
    CHECK(has(r.violated_conditions, Condition::max_increased));
    CHECK(r.algorithm == "event");
    CHECK(r.before_sums == SumVector{121, 121, 112});
    CHECK(r.after_sums == SumVector{70, 61, 62, 150});
    CHECK(r.m == 3);
}

TEST_CASE("trace domination holds on the ls example pair") {
    const LsRun before = run_ls(Instance({18, 10, 6, 4}, 2));
    const LsRun after = run_ls(Instance({18, 10, 9, 4}, 2));
    CHECK(harness::trace_domination_holds(before.trace, after.trace));
}

TEST_CASE("trace domination holds across random single increases") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng.bounded(1, 12);
        const std::size_t m = rng.bounded(2, 5);
        std::vector<Value> values(n);
        for (auto& v : values) v = rng.bounded(1, 100);
        const Instance inst(values, m);
        const Instance up = inst.with_increase(rng.bounded(0, n - 1), rng.bounded(1, 20));
        CHECK(harness::trace_domination_holds(run_ls(inst).trace, run_ls(up).trace));
    }
}

TEST_CASE("trial zero of a multifit search is the known counterexample") {
    harness::SearchConfig cfg;
    cfg.algorithm = Algo::multifit;
    cfg.seed = 987654;  // injected regardless of seed
    const auto [inst, pert] = harness::trial_case(cfg, 0);
    CHECK(inst == kMultifitBase);
    CHECK(pert.index == 5);
    CHECK(pert.epsilon == 1);

    cfg.trials = 1;
    const auto reports = harness::search_anomalies(cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].trial == 0);
    CHECK(reports[0].seed == 987654);
    CHECK(reports[0].result.verdict() == Verdict::violation);
}

TEST_CASE("trial cases respect the configured ranges") {
    harness::SearchConfig cfg;
    cfg.algorithm = Algo::ls;  // no injection for ls
    cfg.seed = 77;
    cfg.n_range = {2, 6};
    cfg.m_range = {2, 3};
    cfg.value_range = {5, 9};
    cfg.epsilon_range = {4, 7};
    for (std::uint64_t t = 0; t < 500; ++t) {
        const auto [inst, pert] = harness::trial_case(cfg, t);
        CHECK(inst.size() >= 2);
        CHECK(inst.size() <= 6);
        CHECK(inst.bins() >= 2);
        CHECK(inst.bins() <= 3);
        for (Value v : inst.values()) {
            CHECK(v >= 5);
            CHECK(v <= 9);
        }
        CHECK(pert.index < inst.size());
        CHECK(pert.epsilon >= 4);
        CHECK(pert.epsilon <= 7);
    }
}

TEST_CASE("trial cases replay bit-identically") {
    harness::SearchConfig cfg;
    cfg.algorithm = Algo::lpt;
    cfg.seed = 4242;
    for (std::uint64_t t : {0ULL, 1ULL, 17ULL, 999ULL}) {
        const auto [i1, p1] = harness::trial_case(cfg, t);
        const auto [i2, p2] = harness::trial_case(cfg, t);
        CHECK(i1 == i2);
        CHECK(p1.index == p2.index);
        CHECK(p1.epsilon == p2.epsilon);
    }
}

TEST_CASE("ls and lpt searches come up clean") {
    for (Algo algo : {Algo::ls, Algo::lpt}) {
        harness::SearchConfig cfg;
        cfg.algorithm = algo;
        cfg.seed = 42;
        cfg.trials = 2000;
        CHECK(harness::search_anomalies(cfg).empty());
    }
}

TEST_CASE("multifit searches replay identically") {
    harness::SearchConfig cfg;
    cfg.algorithm = Algo::multifit;
    cfg.seed = 42;
    cfg.trials = 300;
    const auto a = harness::search_anomalies(cfg);
    const auto b = harness::search_anomalies(cfg);
    REQUIRE(a.size() == b.size());
    CHECK_FALSE(a.empty());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].trial == b[i].trial);
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].result.before_sums == b[i].result.before_sums);
        CHECK(a[i].result.after_sums == b[i].result.after_sums);
        CHECK(a[i].result.violated_conditions == b[i].result.violated_conditions);
    }
    // Every reported violation replays through a fresh single check.
    for (const auto& v : a) {
        const auto r = harness::check_value_monotone(Algo::multifit, v.instance,
                                                     v.perturbation);
        CHECK(r.verdict() == Verdict::violation);
        CHECK(r.before_sums == v.result.before_sums);
        CHECK(r.after_sums == v.result.after_sums);
    }
}

TEST_CASE("search config ranges are validated") {
    harness::SearchConfig cfg;
    cfg.seed = 1;
    cfg.trials = 1;

    harness::SearchConfig bad = cfg;
    bad.n_range = {5, 2};
    CHECK_THROWS_AS(harness::search_anomalies(bad), InputError);
    bad = cfg;
    bad.m_range = {1, 4};  // bins start at 2
    CHECK_THROWS_AS(harness::search_anomalies(bad), InputError);
    bad = cfg;
    bad.value_range = {0, 9};  // values start at 1
    CHECK_THROWS_AS(harness::search_anomalies(bad), InputError);
    bad = cfg;
    bad.epsilon_range = {0, 5};
    CHECK_THROWS_AS(harness::search_anomalies(bad), InputError);
    bad = cfg;
    bad.n_range = {0, 4};
    CHECK_THROWS_AS(harness::search_anomalies(bad), InputError);
}
