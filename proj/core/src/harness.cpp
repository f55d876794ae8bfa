#include "partmon/harness.hpp"

#include <algorithm>

#include "partmon/rng.hpp"

namespace partmon {
namespace harness {

std::string to_string(Algo algo) {
    switch (algo) {
        case Algo::ls: return "ls";
        case Algo::lpt: return "lpt";
        case Algo::multifit: return "multifit";
    }
    return "?";
}

std::optional<Algo> parse_algo(const std::string& name) {
    if (name == "ls") return Algo::ls;
    if (name == "lpt") return Algo::lpt;
    if (name == "multifit") return Algo::multifit;
    return std::nullopt;
}

std::string to_string(Condition c) {
    switch (c) {
        case Condition::max_decreased: return "max-decreased";
        case Condition::min_decreased: return "min-decreased";
        case Condition::no_domination: return "no-domination";
        case Condition::max_increased: return "max-increased";
        case Condition::min_increased: return "min-increased";
    }
    return "?";
}

SumVector sums_of(Algo algo, const Instance& inst) {
    switch (algo) {
        case Algo::ls: return run_ls(inst).partition.sums;
        case Algo::lpt: return run_lpt(inst).partition.sums;
        case Algo::multifit: return run_multifit(inst).partition.sums;
    }
    throw InputError("unknown algorithm");
}

namespace {

// Fills witness and the value-direction conditions (inputs grew, so the
// max and min sums must not shrink and the new vector should dominate).
void judge_value_check(MonotoneCheckResult& r) {
    r.witness = dominates(r.after_sums, r.before_sums);
    const auto max_of = [](const SumVector& v) {
        return *std::max_element(v.begin(), v.end());
    };
    const auto min_of = [](const SumVector& v) {
        return *std::min_element(v.begin(), v.end());
    };
    if (max_of(r.after_sums) < max_of(r.before_sums))
        r.violated_conditions.push_back(Condition::max_decreased);
    if (min_of(r.after_sums) < min_of(r.before_sums))
        r.violated_conditions.push_back(Condition::min_decreased);
    if (!r.witness)
        r.violated_conditions.push_back(Condition::no_domination);
}

void judge_count_check(MonotoneCheckResult& r) {
    const auto max_of = [](const SumVector& v) {
        return *std::max_element(v.begin(), v.end());
    };
    const auto min_of = [](const SumVector& v) {
        return *std::min_element(v.begin(), v.end());
    };
    if (max_of(r.after_sums) > max_of(r.before_sums))
        r.violated_conditions.push_back(Condition::max_increased);
    if (min_of(r.after_sums) > min_of(r.before_sums))
        r.violated_conditions.push_back(Condition::min_increased);
}

}  // namespace

MonotoneCheckResult check_value_monotone(Algo algo, const Instance& inst,
                                         const Perturbation& pert) {
    if (pert.epsilon < 1)
        throw InputError("perturbation epsilon must be at least 1");
    const Instance increased = inst.with_increase(pert.index, pert.epsilon);

    MonotoneCheckResult r;
    r.algorithm = to_string(algo);
    r.values = inst.values();
    r.m = inst.bins();
    r.change = pert;
    r.before_sums = sums_of(algo, inst);
    r.after_sums = sums_of(algo, increased);
    judge_value_check(r);
    return r;
}

MonotoneCheckResult check_multi_increase(Algo algo, const Instance& x,
                                         const Instance& x_prime) {
    if (x_prime.size() != x.size() || x_prime.bins() != x.bins())
        throw InputError("multi-increase check needs instances of the same shape");
    bool strict = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x_prime.values()[i] < x.values()[i])
            throw InputError("value #" + std::to_string(i + 1) +
                             " decreased; not an entrywise increase");
        strict = strict || x_prime.values()[i] > x.values()[i];
    }
    if (!strict)
        throw InputError("multi-increase check needs at least one strict increase");

    MonotoneCheckResult r;
    r.algorithm = to_string(algo);
    r.values = x.values();
    r.m = x.bins();
    r.change = MultiIncrease{x_prime.values()};
    r.before_sums = sums_of(algo, x);
    r.after_sums = sums_of(algo, x_prime);
    judge_value_check(r);
    return r;
}

MonotoneCheckResult check_count_monotone(Algo algo, const Instance& inst,
                                         std::size_t m2) {
    if (m2 <= inst.bins())
        throw InputError("count check needs m2 > m");

    MonotoneCheckResult r;
    r.algorithm = to_string(algo);
    r.values = inst.values();
    r.m = inst.bins();
    r.change = CountChange{m2};
    r.before_sums = sums_of(algo, inst);
    r.after_sums = sums_of(algo, inst.with_bins(m2));
    judge_count_check(r);
    return r;
}

MonotoneCheckResult check_count_monotone(const PrecedenceInstance& inst,
                                         DispatchPolicy policy, std::size_t m2) {
    if (m2 <= inst.machines())
        throw InputError("count check needs m2 > m");

    MonotoneCheckResult r;
    r.algorithm = policy == DispatchPolicy::event_driven ? "event" : "list-order";
    for (const Job& job : inst.jobs())
        r.values.push_back(job.time);
    r.m = inst.machines();
    r.change = CountChange{m2};
    r.before_sums = machine_finish_times(schedule(inst, policy));
    r.after_sums = machine_finish_times(schedule(inst.with_machines(m2), policy));
    judge_count_check(r);
    return r;
}

bool trace_domination_holds(const LsTrace& before, const LsTrace& after) {
    if (before.steps.size() != after.steps.size())
        return false;
    std::size_t k = 0;
    while (k < before.steps.size() && before.steps[k].sums == after.steps[k].sums)
        ++k;
    for (; k < before.steps.size(); ++k)
        if (!dominates(after.steps[k].sums, before.steps[k].sums))
            return false;
    return true;
}

std::pair<Instance, Perturbation> trial_case(const SearchConfig& cfg,
                                             std::uint64_t trial) {
    if (cfg.algorithm == Algo::multifit && trial == 0) {
        // The known MultiFit counterexample, injected so no seed can miss it.
        return {Instance({44, 24, 24, 22, 21, 16, 8, 8, 6, 6}, 3),
                Perturbation{5, 1}};
    }
    SplitMix64 rng = trial_stream(cfg.seed, trial);
    const std::size_t n = rng.bounded(cfg.n_range.lo, cfg.n_range.hi);
    const std::size_t m = rng.bounded(cfg.m_range.lo, cfg.m_range.hi);
    std::vector<Value> values(n);
    for (Value& v : values)
        v = rng.bounded(cfg.value_range.lo, cfg.value_range.hi);
    const std::size_t index = rng.bounded(0, n - 1);
    const Value epsilon = rng.bounded(cfg.epsilon_range.lo, cfg.epsilon_range.hi);
    return {Instance(std::move(values), m), Perturbation{index, epsilon}};
}

std::vector<ViolationReport> search_anomalies(const SearchConfig& cfg) {
    if (cfg.trials < 1)
        throw InputError("search needs at least one trial");
    if (cfg.n_range.lo < 1 || cfg.n_range.lo > cfg.n_range.hi ||
        cfg.m_range.lo < 2 || cfg.m_range.lo > cfg.m_range.hi ||
        cfg.value_range.lo < 1 || cfg.value_range.lo > cfg.value_range.hi ||
        cfg.epsilon_range.lo < 1 || cfg.epsilon_range.lo > cfg.epsilon_range.hi)
        throw InputError("search ranges must be nonempty, with n,values,epsilon >= 1 and m >= 2");

    std::vector<ViolationReport> reports;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        auto [inst, pert] = trial_case(cfg, t);
        MonotoneCheckResult result = check_value_monotone(cfg.algorithm, inst, pert);
        if (result.verdict() == Verdict::violation)
            reports.push_back(
                ViolationReport{cfg.seed, t, std::move(inst), pert, std::move(result)});
    }
    return reports;
}

}  // namespace harness
}  // namespace partmon
