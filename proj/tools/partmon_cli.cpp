// Command-line front end: parse instance files, run the partitioning and
// scheduling algorithms, check and search for monotonicity violations.
//
// Exit codes: 0 = success / check passed, 1 = violation found,
// 2 = input or usage error. Nothing else, ever.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partmon/algos.hpp"
#include "partmon/core.hpp"
#include "partmon/harness.hpp"
#include "partmon/io.hpp"
#include "partmon/oracle.hpp"
#include "partmon/precedence.hpp"

namespace {

using namespace partmon;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file '" + path + "'");
    return in;
}

Instance load_instance(const std::string& path) {
    std::ifstream in = open_file(path);
    try {
        return io::parse_instance_file(in);
    } catch (const io::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

PrecedenceInstance load_precedence(const std::string& path) {
    std::ifstream in = open_file(path);
    try {
        return io::parse_precedence_file(in);
    } catch (const io::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

harness::Algo algo_from_name(const std::string& name) {
    const auto algo = harness::parse_algo(name);
    if (!algo)
        throw InputError("unknown algorithm '" + name + "' (expected ls, lpt or multifit)");
    return *algo;
}

std::string sum_stats(const SumVector& sums) {
    Value max = sums[0], min = sums[0];
    for (Value s : sums) {
        max = std::max(max, s);
        min = std::min(min, s);
    }
    return "max=" + std::to_string(max) + " min=" + std::to_string(min);
}

std::string conditions_text(const harness::MonotoneCheckResult& r) {
    const auto max_of = [](const SumVector& v) {
        return *std::max_element(v.begin(), v.end());
    };
    const auto min_of = [](const SumVector& v) {
        return *std::min_element(v.begin(), v.end());
    };
    std::string out;
    for (harness::Condition c : r.violated_conditions) {
        if (!out.empty())
            out += ' ';
        out += harness::to_string(c);
        switch (c) {
            case harness::Condition::max_decreased:
            case harness::Condition::max_increased:
                out += ' ' + std::to_string(max_of(r.before_sums)) + "->" +
                       std::to_string(max_of(r.after_sums));
                break;
            case harness::Condition::min_decreased:
            case harness::Condition::min_increased:
                out += ' ' + std::to_string(min_of(r.before_sums)) + "->" +
                       std::to_string(min_of(r.after_sums));
                break;
            case harness::Condition::no_domination:
                break;
        }
    }
    return out;
}

std::string conditions_keys(const harness::MonotoneCheckResult& r) {
    if (r.violated_conditions.empty())
        return "-";
    std::string out;
    for (harness::Condition c : r.violated_conditions) {
        if (!out.empty())
            out += ',';
        out += harness::to_string(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// partition
// ---------------------------------------------------------------------------

int cmd_partition(const std::string& algo_name, const std::string& path, bool machine) {
    const harness::Algo algo = algo_from_name(algo_name);
    const Instance inst = load_instance(path);

    Partition partition;
    std::optional<Value> capacity;
    switch (algo) {
        case harness::Algo::ls: partition = run_ls(inst).partition; break;
        case harness::Algo::lpt: partition = run_lpt(inst).partition; break;
        case harness::Algo::multifit: {
            MultifitResult result = run_multifit(inst);
            partition = std::move(result.partition);
            capacity = result.capacity;
            break;
        }
    }

    if (machine) {
        std::cout << "algo=" << algo_name << ' ' << io::instance_record(inst)
                  << " parts=" << io::format_parts(partition.parts)
                  << " sums=" << io::format_values(partition.sums);
        if (capacity)
            std::cout << " capacity=" << *capacity;
        std::cout << ' ' << sum_stats(partition.sums) << '\n';
        return kExitOk;
    }

    for (std::size_t j = 0; j < partition.parts.size(); ++j) {
        std::cout << "part " << j + 1 << ": indices=";
        if (partition.parts[j].empty()) {
            std::cout << '-';
        } else {
            for (std::size_t k = 0; k < partition.parts[j].size(); ++k)
                std::cout << (k ? "," : "") << partition.parts[j][k] + 1;
        }
        std::cout << " sum=" << partition.sums[j] << '\n';
    }
    if (capacity)
        std::cout << "capacity=" << *capacity << ' ';
    std::cout << sum_stats(partition.sums) << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// schedule
// ---------------------------------------------------------------------------

DispatchPolicy policy_from_name(const std::string& name) {
    if (name == "event")
        return DispatchPolicy::event_driven;
    if (name == "list-order")
        return DispatchPolicy::list_order;
    throw InputError("unknown policy '" + name + "' (expected event or list-order)");
}

int cmd_schedule(const std::string& path, const std::string& policy_name) {
    const DispatchPolicy policy = policy_from_name(policy_name);
    const PrecedenceInstance inst = load_precedence(path);
    const Schedule sched = schedule(inst, policy);

    for (std::size_t mach = 0; mach < inst.machines(); ++mach) {
        std::vector<std::size_t> on_machine;
        for (std::size_t i = 0; i < inst.size(); ++i)
            if (sched.assignments[i].machine == mach)
                on_machine.push_back(i);
        std::sort(on_machine.begin(), on_machine.end(), [&](std::size_t a, std::size_t b) {
            return sched.assignments[a].start < sched.assignments[b].start;
        });
        std::cout << "machine " << mach + 1 << ":";
        for (std::size_t i : on_machine)
            std::cout << ' ' << inst.jobs()[i].id << '[' << sched.assignments[i].start
                      << '-' << sched.assignments[i].finish << ']';
        std::cout << '\n';
    }
    std::cout << "makespan=" << sched.makespan << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int report_check(const harness::MonotoneCheckResult& r, bool machine) {
    const bool violated = r.verdict() == harness::Verdict::violation;
    if (machine) {
        std::cout << "algo=" << r.algorithm << " m=" << r.m
                  << " values=" << io::format_values(r.values);
        if (const auto* pert = std::get_if<harness::Perturbation>(&r.change))
            std::cout << " index=" << pert->index + 1 << " epsilon=" << pert->epsilon;
        else if (const auto* count = std::get_if<harness::CountChange>(&r.change))
            std::cout << " m2=" << count->new_m;
        std::cout << " before=" << io::format_values(r.before_sums)
                  << " after=" << io::format_values(r.after_sums);
        if (std::holds_alternative<harness::Perturbation>(r.change))
            std::cout << " domination=" << (r.witness ? "yes" : "no");
        std::cout << " verdict=" << (violated ? "VIOLATION" : "PASS")
                  << " conditions=" << conditions_keys(r) << '\n';
        return violated ? kExitViolation : kExitOk;
    }

    std::cout << "algo=" << r.algorithm << " m=" << r.m
              << " values=" << io::format_values(r.values) << '\n';
    if (const auto* pert = std::get_if<harness::Perturbation>(&r.change))
        std::cout << "change: index=" << pert->index + 1 << " delta=" << pert->epsilon
                  << '\n';
    else if (const auto* count = std::get_if<harness::CountChange>(&r.change))
        std::cout << "change: m2=" << count->new_m << '\n';
    std::cout << "before=" << io::format_values(r.before_sums) << ' '
              << sum_stats(r.before_sums) << '\n';
    std::cout << "after=" << io::format_values(r.after_sums) << ' '
              << sum_stats(r.after_sums) << '\n';
    if (std::holds_alternative<harness::Perturbation>(r.change))
        std::cout << "domination=" << (r.witness ? "yes" : "no") << '\n';
    if (violated) {
        std::cout << "VIOLATION " << conditions_text(r) << '\n';
        return kExitViolation;
    }
    std::cout << "PASS\n";
    return kExitOk;
}

int cmd_check(const std::string& algo_name, const std::string& path,
              std::uint64_t index, std::uint64_t delta, std::uint64_t m2,
              bool machine) {
    const bool value_check = index > 0 || delta > 0;
    const bool count_check = m2 > 0;
    if (value_check == count_check)
        throw InputError("pass either --index with --delta, or --m2");
    if (value_check && (index == 0 || delta == 0))
        throw InputError("--index and --delta must both be given and be at least 1");

    const bool precedence_algo = algo_name == "event" || algo_name == "list-order";
    if (precedence_algo) {
        if (value_check)
            throw InputError("value checks apply to ls, lpt or multifit only");
        const PrecedenceInstance inst = load_precedence(path);
        return report_check(
            harness::check_count_monotone(inst, policy_from_name(algo_name), m2),
            machine);
    }

    const harness::Algo algo = algo_from_name(algo_name);
    const Instance inst = load_instance(path);
    if (value_check) {
        if (index > inst.size())
            throw InputError("--index " + std::to_string(index) + " out of range (n=" +
                             std::to_string(inst.size()) + ")");
        return report_check(
            harness::check_value_monotone(algo, inst, {index - 1, delta}), machine);
    }
    return report_check(harness::check_count_monotone(algo, inst, m2), machine);
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

int cmd_search(const std::string& algo_name, harness::SearchConfig cfg, bool seed_given) {
    cfg.algorithm = algo_from_name(algo_name);
    if (!seed_given) {
        cfg.seed = std::random_device{}();
        std::cout << "seed=" << cfg.seed << '\n';
    }

    const std::vector<harness::ViolationReport> reports = harness::search_anomalies(cfg);
    for (const harness::ViolationReport& v : reports) {
        std::cout << "violation trial=" << v.trial << " seed=" << v.seed
                  << " algo=" << v.result.algorithm << ' '
                  << io::instance_record(v.instance) << " index=" << v.perturbation.index + 1
                  << " epsilon=" << v.perturbation.epsilon
                  << " before=" << io::format_values(v.result.before_sums)
                  << " after=" << io::format_values(v.result.after_sums)
                  << " conditions=" << conditions_keys(v.result) << '\n';
    }
    std::cout << "trials=" << cfg.trials << " violations=" << reports.size()
              << " seed=" << cfg.seed << '\n';
    return reports.empty() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int cmd_oracle(const std::string& path, const std::string& objective_name,
               const std::string& compare, std::uint64_t budget) {
    oracle::Objective objective;
    if (objective_name == "minmax")
        objective = oracle::Objective::min_max;
    else if (objective_name == "maxmin")
        objective = oracle::Objective::max_min;
    else
        throw InputError("unknown objective '" + objective_name +
                         "' (expected minmax or maxmin)");

    const Instance inst = load_instance(path);
    const oracle::OptimalValue opt = oracle::optimal_partition(inst, objective, budget);

    std::cout << "opt=" << opt.value;
    if (!compare.empty()) {
        const SumVector sums = harness::sums_of(algo_from_name(compare), inst);
        const Value algo_value = objective == oracle::Objective::min_max
                                     ? *std::max_element(sums.begin(), sums.end())
                                     : *std::min_element(sums.begin(), sums.end());
        std::cout << " algo=" << algo_value;
        char buf[32];
        if (opt.value == 0)
            std::snprintf(buf, sizeof buf, "%.3f", algo_value == 0 ? 1.0 : 0.0);
        else
            std::snprintf(buf, sizeof buf, "%.3f",
                          static_cast<double>(algo_value) / static_cast<double>(opt.value));
        std::cout << " ratio=" << buf;
    }
    std::cout << '\n';
    for (std::size_t j = 0; j < opt.witness.parts.size(); ++j) {
        std::cout << "part " << j + 1 << ": indices=";
        if (opt.witness.parts[j].empty()) {
            std::cout << '-';
        } else {
            for (std::size_t k = 0; k < opt.witness.parts[j].size(); ++k)
                std::cout << (k ? "," : "") << opt.witness.parts[j][k] + 1;
        }
        std::cout << " sum=" << opt.witness.sums[j] << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Number-partitioning and list-scheduling workbench"};
    app.require_subcommand(1);

    std::string algo, file, policy = "event", objective, compare;
    bool machine = false;
    std::uint64_t index = 0, delta = 0, m2 = 0;
    std::uint64_t budget = oracle::kDefaultBudget;
    harness::SearchConfig cfg;
    cfg.trials = 1000;

    auto* partition = app.add_subcommand("partition", "Partition an instance file");
    partition->add_option("algo", algo, "ls, lpt or multifit")->required();
    partition->add_option("file", file, "instance file")->required();
    partition->add_flag("--machine", machine, "one-line key=value output");

    auto* sched = app.add_subcommand("schedule", "Schedule a precedence file");
    sched->add_option("file", file, "precedence file")->required();
    sched->add_option("--policy", policy, "event or list-order");

    auto* check = app.add_subcommand("check", "Run one monotonicity check");
    check->add_option("algo", algo, "ls, lpt, multifit, event or list-order")->required();
    check->add_option("file", file, "instance or precedence file")->required();
    check->add_option("--index", index, "one-based value index to increase");
    check->add_option("--delta", delta, "increase amount (epsilon)");
    check->add_option("--m2", m2, "increased bin/machine count");
    check->add_flag("--machine", machine, "one-line key=value output");

    auto* search = app.add_subcommand("search", "Randomized anomaly search");
    search->add_option("algo", algo, "ls, lpt or multifit")->required();
    search->add_option("--trials", cfg.trials, "number of random trials");
    auto* seed_opt = search->add_option("--seed", cfg.seed, "RNG seed (printed if omitted)");
    search->add_option("--n-min", cfg.n_range.lo, "minimum item count");
    search->add_option("--n-max", cfg.n_range.hi, "maximum item count");
    search->add_option("--m-min", cfg.m_range.lo, "minimum bin count");
    search->add_option("--m-max", cfg.m_range.hi, "maximum bin count");
    search->add_option("--value-min", cfg.value_range.lo, "minimum item value");
    search->add_option("--value-max", cfg.value_range.hi, "maximum item value");
    search->add_option("--epsilon-min", cfg.epsilon_range.lo, "minimum increase");
    search->add_option("--epsilon-max", cfg.epsilon_range.hi, "maximum increase");

    auto* orc = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
    orc->add_option("file", file, "instance file")->required();
    orc->add_option("--objective", objective, "minmax or maxmin")->required();
    orc->add_option("--compare", compare, "also run ls, lpt or multifit and report the ratio");
    orc->add_option("--budget", budget, "assignment evaluation budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (partition->parsed())
            return cmd_partition(algo, file, machine);
        if (sched->parsed())
            return cmd_schedule(file, policy);
        if (check->parsed())
            return cmd_check(algo, file, index, delta, m2, machine);
        if (search->parsed())
            return cmd_search(algo, cfg, seed_opt->count() > 0);
        if (orc->parsed())
            return cmd_oracle(file, objective, compare, budget);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
