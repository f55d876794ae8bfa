#include "partmon/precedence.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace partmon {

PrecedenceInstance::PrecedenceInstance(std::vector<Job> jobs,
                                       std::vector<std::vector<std::size_t>> deps_of,
                                       std::size_t machines)
    : jobs_(std::move(jobs)), deps_of_(std::move(deps_of)), machines_(machines) {
    if (machines_ < 1)
        throw InputError("machine count must be at least 1");
    if (deps_of_.size() != jobs_.size())
        throw InputError("dependency list length does not match the job list");

    std::unordered_set<std::string> ids;
    for (const Job& job : jobs_) {
        if (job.time < 1)
            throw InputError("job '" + job.id + "' has processing time 0");
        if (!ids.insert(job.id).second)
            throw InputError("duplicate job id '" + job.id + "'");
    }

    const std::size_t n = jobs_.size();
    std::vector<std::size_t> pending(n, 0);
    std::vector<std::vector<std::size_t>> dependents(n);
    for (std::size_t i = 0; i < n; ++i) {
        pending[i] = deps_of_[i].size();
        for (std::size_t d : deps_of_[i]) {
            if (d >= n)
                throw InputError("job '" + jobs_[i].id + "' depends on an unknown job");
            if (d == i)
                throw InputError("job '" + jobs_[i].id + "' depends on itself");
            dependents[d].push_back(i);
        }
    }

    // Kahn's algorithm; anything left over sits on a cycle.
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (pending[i] == 0)
            ready.push_back(i);
    std::size_t processed = 0;
    while (!ready.empty()) {
        const std::size_t i = ready.back();
        ready.pop_back();
        ++processed;
        for (std::size_t j : dependents[i])
            if (--pending[j] == 0)
                ready.push_back(j);
    }
    if (processed != n)
        throw InputError("dependency graph contains a cycle");
}

PrecedenceInstance PrecedenceInstance::with_machines(std::size_t machines) const {
    return PrecedenceInstance(jobs_, deps_of_, machines);
}

namespace {

Value ready_time(const PrecedenceInstance& inst, const Schedule& s, std::size_t job) {
    Value t = 0;
    for (std::size_t d : inst.deps_of()[job])
        t = std::max(t, s.assignments[d].finish);
    return t;
}

Schedule schedule_event_driven(const PrecedenceInstance& inst) {
    const std::size_t n = inst.size();
    const std::size_t m = inst.machines();
    Schedule s{std::vector<JobAssignment>(n), m, 0};

    std::vector<Value> machine_free(m, 0);
    std::vector<bool> started(n, false);
    std::vector<bool> finished(n, false);
    std::size_t remaining = n;
    Value now = 0;

    while (remaining > 0) {
        for (std::size_t i = 0; i < n; ++i)
            if (started[i] && !finished[i] && s.assignments[i].finish <= now)
                finished[i] = true;

        // Idle machines pick up ready jobs in list order, smallest
        // machine index first.
        for (std::size_t mach = 0; mach < m; ++mach) {
            if (machine_free[mach] > now)
                continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (started[i])
                    continue;
                const auto& deps = inst.deps_of()[i];
                if (std::all_of(deps.begin(), deps.end(),
                                [&](std::size_t d) { return finished[d]; })) {
                    s.assignments[i] = {mach, now, now + inst.jobs()[i].time};
                    started[i] = true;
                    machine_free[mach] = s.assignments[i].finish;
                    --remaining;
                    break;
                }
            }
        }
        if (remaining == 0)
            break;

        // Advance to the next finish event.
        Value next = std::numeric_limits<Value>::max();
        for (std::size_t i = 0; i < n; ++i)
            if (started[i] && !finished[i])
                next = std::min(next, s.assignments[i].finish);
        now = next;
    }

    for (const JobAssignment& a : s.assignments)
        s.makespan = std::max(s.makespan, a.finish);
    return s;
}

Schedule schedule_list_order(const PrecedenceInstance& inst) {
    const std::size_t n = inst.size();
    const std::size_t m = inst.machines();
    Schedule s{std::vector<JobAssignment>(n), m, 0};

    std::vector<Value> machine_free(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& deps = inst.deps_of()[i];
        for (std::size_t d : deps)
            if (d >= i)
                throw InputError("list-order dispatch needs dependencies on earlier jobs");
        const Value ready = ready_time(inst, s, i);

        std::size_t best = 0;
        Value best_start = std::max(ready, machine_free[0]);
        for (std::size_t mach = 1; mach < m; ++mach) {
            const Value start = std::max(ready, machine_free[mach]);
            if (start < best_start) {
                best = mach;
                best_start = start;
            }
        }
        s.assignments[i] = {best, best_start, best_start + inst.jobs()[i].time};
        machine_free[best] = s.assignments[i].finish;
    }

    for (const JobAssignment& a : s.assignments)
        s.makespan = std::max(s.makespan, a.finish);
    return s;
}

}  // namespace

Schedule schedule(const PrecedenceInstance& inst, DispatchPolicy policy) {
    return policy == DispatchPolicy::event_driven ? schedule_event_driven(inst)
                                                  : schedule_list_order(inst);
}

std::int64_t makespan_delta(const Schedule& before, const Schedule& after) {
    if (after.makespan >= before.makespan)
        return static_cast<std::int64_t>(after.makespan - before.makespan);
    return -static_cast<std::int64_t>(before.makespan - after.makespan);
}

SumVector machine_finish_times(const Schedule& s) {
    SumVector finish(s.machines, 0);
    for (const JobAssignment& a : s.assignments)
        finish[a.machine] = std::max(finish[a.machine], a.finish);
    return finish;
}

SumVector machine_loads(const PrecedenceInstance& inst, const Schedule& s) {
    SumVector loads(s.machines, 0);
    for (std::size_t i = 0; i < inst.size(); ++i)
        loads[s.assignments[i].machine] += inst.jobs()[i].time;
    return loads;
}

void validate_schedule(const PrecedenceInstance& inst, const Schedule& s) {
    if (s.assignments.size() != inst.size())
        throw Error("schedule does not cover every job");
    if (s.machines != inst.machines())
        throw Error("schedule machine count disagrees with the instance");

    Value makespan = 0;
    std::vector<std::vector<std::pair<Value, Value>>> busy(s.machines);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const JobAssignment& a = s.assignments[i];
        if (a.machine >= s.machines)
            throw Error("job '" + inst.jobs()[i].id + "' assigned to unknown machine");
        if (a.finish != a.start + inst.jobs()[i].time)
            throw Error("job '" + inst.jobs()[i].id + "' finish != start + time");
        for (std::size_t d : inst.deps_of()[i])
            if (a.start < s.assignments[d].finish)
                throw Error("job '" + inst.jobs()[i].id + "' starts before dependency '" +
                            inst.jobs()[d].id + "' finishes");
        busy[a.machine].emplace_back(a.start, a.finish);
        makespan = std::max(makespan, a.finish);
    }
    for (auto& intervals : busy) {
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t k = 1; k < intervals.size(); ++k)
            if (intervals[k].first < intervals[k - 1].second)
                throw Error("two jobs overlap on one machine");
    }
    if (makespan != s.makespan)
        throw Error("stored makespan disagrees with job finish times");
}

}  // namespace partmon
