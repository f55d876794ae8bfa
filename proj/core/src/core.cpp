#include "partmon/core.hpp"

#include <algorithm>
#include <numeric>

namespace partmon {

Instance::Instance(std::vector<Value> values, std::size_t bins)
    : values_(std::move(values)), bins_(bins), total_(0) {
    if (values_.empty())
        throw InputError("instance needs at least one value");
    if (bins_ < 2)
        throw InputError("bin count must be at least 2, got " + std::to_string(bins_));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1)
            throw InputError("values must be positive, value #" + std::to_string(i + 1) +
                             " is 0");
        if (values_[i] > std::numeric_limits<Value>::max() - total_)
            throw InputError("total value sum exceeds the 64-bit range");
        total_ += values_[i];
    }
}

Instance Instance::with_increase(std::size_t index, Value delta) const {
    if (index >= values_.size())
        throw InputError("value index " + std::to_string(index + 1) + " out of range (n=" +
                         std::to_string(values_.size()) + ")");
    std::vector<Value> v = values_;
    if (delta > std::numeric_limits<Value>::max() - v[index])
        throw InputError("increased value exceeds the 64-bit range");
    v[index] += delta;
    return Instance(std::move(v), bins_);
}

Instance Instance::with_bins(std::size_t bins) const {
    return Instance(values_, bins);
}

Partition Partition::from_parts(const Instance& inst,
                                std::vector<std::vector<std::size_t>> parts) {
    Partition p;
    p.parts = std::move(parts);
    p.sums.resize(p.parts.size(), 0);
    for (std::size_t j = 0; j < p.parts.size(); ++j)
        for (std::size_t idx : p.parts[j]) {
            if (idx >= inst.size())
                throw InputError("partition refers to item index out of range");
            p.sums[j] += inst.values()[idx];
        }
    p.validate(inst);
    return p;
}

void Partition::validate(const Instance& inst) const {
    if (parts.size() != sums.size())
        throw InputError("partition parts/sums length mismatch");
    std::vector<bool> seen(inst.size(), false);
    Value grand = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Value s = 0;
        for (std::size_t idx : parts[j]) {
            if (idx >= inst.size())
                throw InputError("partition refers to item index out of range");
            if (seen[idx])
                throw InputError("item index " + std::to_string(idx + 1) +
                                 " appears in more than one part");
            seen[idx] = true;
            s += inst.values()[idx];
        }
        if (s != sums[j])
            throw InputError("stored sum of part " + std::to_string(j + 1) +
                             " disagrees with its items");
        grand += s;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InputError("partition does not cover every item");
    if (grand != inst.total())
        throw InputError("partition sums do not add up to the instance total");
}

Value max_sum(const Partition& p) {
    return *std::max_element(p.sums.begin(), p.sums.end());
}

Value min_sum(const Partition& p) {
    return *std::min_element(p.sums.begin(), p.sums.end());
}

bool DominationWitness::valid_for(const SumVector& s, const SumVector& t) const {
    if (s.size() != t.size() || perm.size() != s.size())
        return false;
    std::vector<bool> used(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || used[perm[i]])
            return false;  // not a bijection
        used[perm[i]] = true;
        if (s[perm[i]] < t[i])
            return false;
    }
    return true;
}

std::optional<DominationWitness> dominates(const SumVector& s, const SumVector& t) {
    if (s.size() != t.size())
        throw InputError("dominates: vectors have different lengths");
    const std::size_t m = s.size();

    auto sorted_order = [](const SumVector& v) {
        std::vector<std::size_t> order(v.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        return order;
    };
    const std::vector<std::size_t> s_order = sorted_order(s);
    const std::vector<std::size_t> t_order = sorted_order(t);

    for (std::size_t k = 0; k < m; ++k)
        if (s[s_order[k]] < t[t_order[k]])
            return std::nullopt;

    // Match the k-th smallest of s against the k-th smallest of t.
    DominationWitness w;
    w.perm.resize(m);
    for (std::size_t k = 0; k < m; ++k)
        w.perm[t_order[k]] = s_order[k];
    return w;
}

}  // namespace partmon
