#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace partmon {

/// All item values, subset sums and capacities are unsigned 64-bit integers.
/// Real-valued inputs must be pre-scaled by the caller; arithmetic is
/// overflow-checked at instance construction, never silently wrapped.
using Value = std::uint64_t;

/// A vector of subset sums, one entry per bin.
using SumVector = std::vector<Value>;

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input: validation failures, malformed files, out-of-range
/// arguments. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A number-partitioning instance: a sequence of positive values and a
/// bin count m >= 2. Items are addressed by their zero-based position in
/// the value sequence (file formats and CLI output use one-based
/// positions). Immutable after construction.
class Instance {
public:
    /// Validates: at least one value, every value >= 1, m >= 2, and the
    /// total sum representable in 64 bits. Throws InputError otherwise.
    Instance(std::vector<Value> values, std::size_t bins);

    const std::vector<Value>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::size_t bins() const { return bins_; }
    Value total() const { return total_; }

    /// Copy of this instance with values[index] increased by delta.
    Instance with_increase(std::size_t index, Value delta) const;

    /// Same values, different bin count.
    Instance with_bins(std::size_t bins) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.values_ == b.values_ && a.bins_ == b.bins_;
    }

private:
    std::vector<Value> values_;
    std::size_t bins_;
    Value total_;
};

/// An m-way split of an instance's items. parts[j] holds zero-based item
/// indices; sums[j] is the total value in part j. Empty parts are legal
/// and have sum 0 (instances with fewer items than bins leave bins empty).
struct Partition {
    std::vector<std::vector<std::size_t>> parts;
    SumVector sums;

    /// Builds a partition from explicit parts, recomputing sums.
    /// Throws InputError unless the parts are disjoint and cover exactly
    /// the instance's item indices.
    static Partition from_parts(const Instance& inst,
                                std::vector<std::vector<std::size_t>> parts);

    /// Re-checks every structural invariant against an instance:
    /// disjoint cover of {0..n-1}, stored sums match recomputation,
    /// grand total matches the instance.
    void validate(const Instance& inst) const;
};

Value max_sum(const Partition& p);
Value min_sum(const Partition& p);

/// Certificate that sum vector s dominates t: perm is a bijection on
/// {0..m-1} with s[perm[i]] >= t[i] for every i.
struct DominationWitness {
    std::vector<std::size_t> perm;

    /// Re-checks the certificate against the two vectors.
    bool valid_for(const SumVector& s, const SumVector& t) const;
};

/// Decides whether s dominates t, i.e. whether some permutation puts
/// every entry of s at or above the matching entry of t. Decided by
/// sorting both vectors ascending and comparing position-wise; the
/// returned witness is the permutation induced by the two sort orders.
/// Throws InputError if the vectors differ in length.
std::optional<DominationWitness> dominates(const SumVector& s, const SumVector& t);

}  // namespace partmon
