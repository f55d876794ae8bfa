#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "partmon/algos.hpp"
#include "partmon/core.hpp"
#include "partmon/precedence.hpp"

namespace partmon {
namespace harness {

enum class Algo { ls, lpt, multifit };

std::string to_string(Algo algo);
std::optional<Algo> parse_algo(const std::string& name);

/// Sum vector produced by the given algorithm on the instance.
SumVector sums_of(Algo algo, const Instance& inst);

/// A single-coordinate increase: values[index] grows by epsilon.
struct Perturbation {
    std::size_t index;  // zero-based (CLI flags are one-based)
    Value epsilon;      // >= 1
};

/// Several coordinates increased at once; holds the full new value vector.
struct MultiIncrease {
    std::vector<Value> new_values;
};

/// The bin/machine count grows from the instance's m to new_m.
struct CountChange {
    std::size_t new_m;
};

using CheckKind = std::variant<Perturbation, MultiIncrease, CountChange>;

/// What went wrong, named from the perspective of the check that ran.
/// Value checks flag decreases (inputs grew, so sums must not shrink);
/// count checks flag increases (more bins must not push sums up).
enum class Condition {
    max_decreased,
    min_decreased,
    no_domination,
    max_increased,
    min_increased,
};

std::string to_string(Condition c);

enum class Verdict { pass, violation };

/// One monotonicity check, fully recorded: both runs' sum vectors, the
/// domination witness when one exists, and every violated condition.
/// The witness and the max/min conditions are tracked separately, so a
/// result can show "monotone but not dominating" as well as the usual
/// pass/violation split.
struct MonotoneCheckResult {
    std::string algorithm;      // "ls", "lpt", "multifit", "event", "list-order"
    std::vector<Value> values;  // input values (processing times for precedence)
    std::size_t m;              // bin/machine count of the before run
    CheckKind change;
    SumVector before_sums;
    SumVector after_sums;
    std::optional<DominationWitness> witness;
    std::vector<Condition> violated_conditions;

    Verdict verdict() const {
        return violated_conditions.empty() ? Verdict::pass : Verdict::violation;
    }
};

/// Runs algo on x and on x with values[pert.index] += pert.epsilon, then
/// compares the two sum vectors: does the new vector dominate the old
/// one, and did the max or min sum decrease? Throws InputError for
/// epsilon 0 or an out-of-range index.
MonotoneCheckResult check_value_monotone(Algo algo, const Instance& inst,
                                         const Perturbation& pert);

/// Same comparison for a general entrywise increase. x_prime must have
/// the same shape as x, be >= x in every coordinate and > x in at least
/// one.
MonotoneCheckResult check_multi_increase(Algo algo, const Instance& x,
                                         const Instance& x_prime);

/// Re-runs algo with m2 > m bins and flags any increase of the largest
/// or smallest sum. No domination witness: the two vectors have
/// different lengths.
MonotoneCheckResult check_count_monotone(Algo algo, const Instance& inst,
                                         std::size_t m2);

/// Count-monotonicity for precedence list scheduling; the compared
/// vectors are per-machine finish times, whose max is the makespan.
MonotoneCheckResult check_count_monotone(const PrecedenceInstance& inst,
                                         DispatchPolicy policy, std::size_t m2);

/// The step-by-step strengthening behind the value-monotonicity of LS:
/// after two traces first differ, the perturbed trace's sum vector must
/// dominate the original's at every subsequent iteration.
bool trace_domination_holds(const LsTrace& before, const LsTrace& after);

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;  // inclusive
};

/// Randomized search for value-monotonicity violations. Every trial is
/// derived from (seed, trial index) alone, so any hit replays exactly.
struct SearchConfig {
    Algo algorithm = Algo::ls;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    Range n_range{1, 12};
    Range m_range{2, 5};
    Range value_range{1, 100};
    Range epsilon_range{1, 20};
};

struct ViolationReport {
    std::uint64_t seed;
    std::uint64_t trial;
    Instance instance;
    Perturbation perturbation;
    MonotoneCheckResult result;
};

/// The deterministic (instance, perturbation) pair for one trial.
/// MultiFit searches pin trial 0 to the known counterexample instance
/// (44,24,24,22,21,16,8,8,6,6 with m=3, value #6 + 1) so the anomaly can
/// never be missed; all other trials are drawn from the trial's stream
/// in the documented order n, m, values, index, epsilon.
std::pair<Instance, Perturbation> trial_case(const SearchConfig& cfg,
                                             std::uint64_t trial);

/// Runs check_value_monotone over all trials and returns every
/// violation, ordered by trial index.
std::vector<ViolationReport> search_anomalies(const SearchConfig& cfg);

}  // namespace harness
}  // namespace partmon
