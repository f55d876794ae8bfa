#include "partmon/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace partmon {
namespace oracle {

namespace {

// m^n, saturating at max so oversized products still compare against the
// budget correctly.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        result *= base;
    }
    return result;
}

struct Enumeration {
    const Instance& inst;
    Objective objective;
    SumVector sums;
    std::vector<std::size_t> assignment;
    bool have_best = false;
    Value best_value = 0;
    std::vector<std::size_t> best_assignment;

    explicit Enumeration(const Instance& i, Objective o)
        : inst(i), objective(o), sums(i.bins(), 0), assignment(i.size(), 0) {}

    Value evaluate() const {
        return objective == Objective::min_max
                   ? *std::max_element(sums.begin(), sums.end())
                   : *std::min_element(sums.begin(), sums.end());
    }

    bool improves(Value candidate) const {
        if (!have_best)
            return true;
        return objective == Objective::min_max ? candidate < best_value
                                               : candidate > best_value;
    }

    void visit(std::size_t item) {
        if (item == inst.size()) {
            const Value candidate = evaluate();
            if (improves(candidate)) {
                have_best = true;
                best_value = candidate;
                best_assignment = assignment;
            }
            return;
        }
        // Item 0 is pinned to part 0.
        const std::size_t limit = item == 0 ? 1 : inst.bins();
        for (std::size_t part = 0; part < limit; ++part) {
            assignment[item] = part;
            sums[part] += inst.values()[item];
            visit(item + 1);
            sums[part] -= inst.values()[item];
        }
    }
};

}  // namespace

OptimalValue optimal_partition(const Instance& inst, Objective objective,
                               std::uint64_t budget) {
    if (saturating_pow(inst.bins(), inst.size()) > budget)
        throw BudgetError("enumeration budget exceeded: " + std::to_string(inst.bins()) +
                          "^" + std::to_string(inst.size()) + " assignments > " +
                          std::to_string(budget));

    Enumeration enumeration(inst, objective);
    enumeration.visit(0);

    std::vector<std::vector<std::size_t>> parts(inst.bins());
    for (std::size_t item = 0; item < inst.size(); ++item)
        parts[enumeration.best_assignment[item]].push_back(item);
    return OptimalValue{objective, enumeration.best_value,
                        Partition::from_parts(inst, std::move(parts))};
}

bool dominates_bruteforce(const SumVector& s, const SumVector& t) {
    if (s.size() != t.size())
        throw InputError("dominates_bruteforce: vectors have different lengths");
    if (s.size() > 8)
        throw InputError("dominates_bruteforce enumerates m! permutations, m <= 8 only");

    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            ok = s[perm[i]] >= t[i];
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

FfdPacking ffd_classic(std::span<const Value> values, Value capacity) {
    if (capacity < 1)
        throw InputError("bin capacity must be positive");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] > capacity)
            throw InputError("value #" + std::to_string(i + 1) + " (" +
                             std::to_string(values[i]) + ") exceeds bin capacity " +
                             std::to_string(capacity));

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] > values[b];
    });

    FfdPacking packing;
    packing.capacity = capacity;
    for (std::size_t item : order) {
        bool placed = false;
        for (std::size_t b = 0; b < packing.bins.size(); ++b) {
            if (values[item] <= capacity - packing.bin_sums[b]) {
                packing.bins[b].push_back(item);
                packing.bin_sums[b] += values[item];
                placed = true;
                break;
            }
        }
        if (!placed) {
            packing.bins.push_back({item});
            packing.bin_sums.push_back(values[item]);
        }
    }
    return packing;
}

}  // namespace oracle
}  // namespace partmon
