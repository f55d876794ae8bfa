#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partmon/core.hpp"

namespace partmon {

struct Job {
    std::string id;
    Value time;  // processing time, >= 1
};

/// Jobs with processing times and dependency edges, scheduled on m
/// identical machines. Jobs are dispatched in list order (the order of
/// the job records). Immutable after construction.
class PrecedenceInstance {
public:
    /// deps_of[i] lists the jobs that must finish before job i starts.
    /// Validates unique ids, positive times, m >= 1, in-range dependency
    /// indices and acyclicity. Throws InputError otherwise.
    PrecedenceInstance(std::vector<Job> jobs,
                       std::vector<std::vector<std::size_t>> deps_of,
                       std::size_t machines);

    const std::vector<Job>& jobs() const { return jobs_; }
    const std::vector<std::vector<std::size_t>>& deps_of() const { return deps_of_; }
    std::size_t machines() const { return machines_; }
    std::size_t size() const { return jobs_.size(); }

    /// Same jobs and dependencies on a different machine count.
    PrecedenceInstance with_machines(std::size_t machines) const;

private:
    std::vector<Job> jobs_;
    std::vector<std::vector<std::size_t>> deps_of_;
    std::size_t machines_;
};

/// How ready jobs are matched to machines. The two policies differ as
/// soon as dependencies can hold a list-earlier job back while a later
/// one is ready.
enum class DispatchPolicy {
    /// Simulate time. Whenever a machine is idle it takes the first job
    /// in list order whose dependencies have all finished; if none is
    /// ready the machine waits for the next finish event. Simultaneously
    /// idle machines are served in machine-index order.
    event_driven,
    /// Commit jobs strictly in list order. A job becomes ready when its
    /// last dependency finishes and goes to the machine minimizing
    /// max(ready time, machine free time), ties to the smallest index.
    list_order,
};

struct JobAssignment {
    std::size_t machine;
    Value start;
    Value finish;  // start + processing time
};

struct Schedule {
    std::vector<JobAssignment> assignments;  // parallel to the job list
    std::size_t machines;
    Value makespan;  // max finish over all jobs, 0 for an empty job list
};

/// Runs list scheduling under the given dispatch policy. Both policies
/// break machine ties by smallest index and job ties by list order, so
/// runs are fully deterministic.
Schedule schedule(const PrecedenceInstance& inst, DispatchPolicy policy);

/// after.makespan - before.makespan. Positive means the makespan grew.
std::int64_t makespan_delta(const Schedule& before, const Schedule& after);

/// Latest finish per machine (0 for machines that received no job).
SumVector machine_finish_times(const Schedule& s);

/// Total processing time per machine. Equals finish times only when no
/// machine ever idles between jobs.
SumVector machine_loads(const PrecedenceInstance& inst, const Schedule& s);

/// Re-checks a schedule against its instance: every job assigned to a
/// valid machine, finish = start + time, no overlap on any machine,
/// starts never before dependency finishes, stored makespan matches.
/// Throws Error on the first violated condition.
void validate_schedule(const PrecedenceInstance& inst, const Schedule& s);

}  // namespace partmon
