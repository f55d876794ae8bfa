#include "partmon/algos.hpp"

#include <algorithm>
#include <numeric>

namespace partmon {

namespace {

// Indices 0..n-1 reordered so that values come out descending; equal
// values keep their input order.
std::vector<std::size_t> descending_order(std::span<const Value> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] > values[b];
    });
    return order;
}

// Core LS loop over an explicit processing order of item indices.
LsRun run_ls_in_order(const Instance& inst, const std::vector<std::size_t>& order) {
    const std::size_t m = inst.bins();
    LsRun run;
    run.partition.parts.assign(m, {});
    run.partition.sums.assign(m, 0);
    run.trace.steps.reserve(order.size());

    SumVector& sums = run.partition.sums;
    for (std::size_t item : order) {
        const std::size_t bin =
            std::min_element(sums.begin(), sums.end()) - sums.begin();
        sums[bin] += inst.values()[item];
        run.partition.parts[bin].push_back(item);
        run.trace.steps.push_back({item, bin, sums});
    }
    return run;
}

}  // namespace

LsRun run_ls(const Instance& inst) {
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), 0);
    return run_ls_in_order(inst, order);
}

LsRun run_lpt(const Instance& inst) {
    return run_ls_in_order(inst, descending_order(inst.values()));
}

FfdPacking run_ffd(std::span<const Value> values, Value capacity) {
    if (capacity < 1)
        throw InputError("bin capacity must be positive");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] > capacity)
            throw InputError("value #" + std::to_string(i + 1) + " (" +
                             std::to_string(values[i]) + ") exceeds bin capacity " +
                             std::to_string(capacity));

    FfdPacking packing;
    packing.capacity = capacity;

    std::vector<std::size_t> remaining = descending_order(values);
    while (!remaining.empty()) {
        std::vector<std::size_t> bin;
        std::vector<std::size_t> skipped;
        Value sum = 0;
        for (std::size_t item : remaining) {
            if (values[item] <= capacity - sum) {
                sum += values[item];
                bin.push_back(item);
            } else {
                skipped.push_back(item);
            }
        }
        packing.bins.push_back(std::move(bin));
        packing.bin_sums.push_back(sum);
        remaining = std::move(skipped);
    }
    return packing;
}

namespace {

bool ffd_fits(const Instance& inst, Value capacity, std::size_t max_bins,
              FfdPacking* out = nullptr) {
    FfdPacking packing = run_ffd(inst.values(), capacity);
    const bool ok = packing.bins.size() <= max_bins;
    if (ok && out)
        *out = std::move(packing);
    return ok;
}

}  // namespace

MultifitResult run_multifit(const Instance& inst) {
    const std::size_t m = inst.bins();
    const Value total = inst.total();
    const Value max_value = *std::max_element(inst.values().begin(), inst.values().end());

    // No capacity below this can work: smaller than ceil(total/m) leaves
    // too little room overall, smaller than the largest value cannot hold it.
    const Value lower = std::max((total + m - 1) / m, max_value);

    // Grow the upper bound until FFD fits; capacity=total always does.
    Value upper = lower;
    while (!ffd_fits(inst, upper, m))
        upper = (upper > total / 2) ? total : upper * 2;

    Value lo = lower, hi = upper;
    while (lo < hi) {
        const Value mid = lo + (hi - lo) / 2;
        if (ffd_fits(inst, mid, m))
            hi = mid;
        else
            lo = mid + 1;
    }
    Value capacity = lo;

    // FFD feasibility can dip below the boundary the binary search found;
    // probe one step down and rescan linearly from the lower bound if so.
    if (capacity > lower && ffd_fits(inst, capacity - 1, m)) {
        Value c = lower;
        while (!ffd_fits(inst, c, m))
            ++c;
        capacity = c;
    }

    FfdPacking packing;
    ffd_fits(inst, capacity, m, &packing);

    std::vector<std::vector<std::size_t>> parts = std::move(packing.bins);
    parts.resize(m);  // pad with empty parts when FFD used fewer bins
    return MultifitResult{capacity, Partition::from_parts(inst, std::move(parts))};
}

}  // namespace partmon
