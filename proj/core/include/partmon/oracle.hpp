#pragma once

#include <cstdint>
#include <span>

#include "partmon/algos.hpp"
#include "partmon/core.hpp"

namespace partmon {
namespace oracle {

/// Enumeration would exceed the configured budget. Mapped to CLI exit 2.
class BudgetError : public InputError {
public:
    explicit BudgetError(const std::string& msg) : InputError(msg) {}
};

enum class Objective { min_max, max_min };

struct OptimalValue {
    Objective objective;
    Value value;
    Partition witness;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Exact optimum by exhaustive enumeration of all m^n assignments, with
/// the first item pinned to part 0 (part labels do not affect the
/// optimum, so this loses nothing and saves a factor m). Deliberately
/// has no pruning or bounding: this is the slow reference the fast
/// algorithms are measured against. Throws BudgetError when m^n exceeds
/// the budget.
OptimalValue optimal_partition(const Instance& inst, Objective objective,
                               std::uint64_t budget = kDefaultBudget);

/// Domination decided the expensive literal way: try all m! permutations.
/// Restricted to m <= 8. The fast sorted comparison is checked against
/// this on every pair the tests can afford.
bool dominates_bruteforce(const SumVector& s, const SumVector& t);

/// Classical first-fit-decreasing: items descending (stable), each item
/// goes to the lowest-indexed open bin where it fits, opening a new bin
/// when none does. Cross-check for the pass-based run_ffd; both must
/// produce identical bins.
FfdPacking ffd_classic(std::span<const Value> values, Value capacity);

}  // namespace oracle
}  // namespace partmon
