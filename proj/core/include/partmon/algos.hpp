#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "partmon/core.hpp"

namespace partmon {

/// One iteration of a list-scheduling run: which item was placed, into
/// which bin, and the full sum vector right after the placement.
struct LsStep {
    std::size_t item;  // zero-based index into the instance's values
    std::size_t bin;
    SumVector sums;
};

struct LsTrace {
    std::vector<LsStep> steps;
};

struct LsRun {
    Partition partition;
    LsTrace trace;
};

/// List Scheduling: processes values in input order, placing each into
/// the bin with the currently smallest sum, ties to the smallest bin
/// index. Returns the final partition and the per-iteration trace.
LsRun run_ls(const Instance& inst);

/// Longest Processing Time first: stable-sorts the values descending
/// (equal values keep their input order) and runs LS on that sequence.
/// Parts and trace steps refer to original item indices.
LsRun run_lpt(const Instance& inst);

/// A first-fit-decreasing packing at a fixed capacity. Bins appear in
/// opening order, are nonempty, and each bin sum is at most capacity.
struct FfdPacking {
    Value capacity;
    std::vector<std::vector<std::size_t>> bins;  // zero-based item indices
    std::vector<Value> bin_sums;
};

/// First Fit Decreasing, stated as repeated single-bin passes: sort the
/// values descending (stable), then while items remain, open a bin and
/// sweep all remaining items in order, inserting each one that still
/// fits. Throws InputError if any value exceeds the capacity (such an
/// item could never be placed) or if capacity is 0.
FfdPacking run_ffd(std::span<const Value> values, Value capacity);

/// Result of the MultiFit capacity search: the smallest capacity at
/// which FFD packs everything into at most m bins, and the resulting
/// m-part partition (padded with empty parts when FFD opens fewer).
struct MultifitResult {
    Value capacity;
    Partition partition;
};

/// MultiFit: binary-searches integer capacities for the feasibility
/// boundary of FFD, starting from lower bound max(ceil(total/m), max
/// value). Because FFD feasibility is not guaranteed monotone in the
/// capacity, the candidate is re-checked against capacity-1 and the
/// search falls back to a linear upward scan if that probe is feasible,
/// so the returned capacity is the true minimum.
MultifitResult run_multifit(const Instance& inst);

}  // namespace partmon
