#ifndef AFFSUB_EXPERIMENT_HPP
#define AFFSUB_EXPERIMENT_HPP

#include "affsub/geometry.hpp"
#include "affsub/groups.hpp"
#include "affsub/matrix.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace affsub {

inline constexpr int kReportFormatVersion = 1;

struct ExperimentPlan {
    std::size_t d = 2;
    std::vector<std::string> group_specs;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t denom_bound = 50;
    TupleMode tuple_mode = TupleMode::exhaustive();  // sampled: count only, seeds derive from `seed`
    bool stop_on_first_witness = false;
    std::size_t closure_cap = kDefaultClosureCap;
    unsigned workers = 1;  // does not affect output

    /// Throws InputError on d < 2, trials < 1, denom_bound < 1 or no groups.
    void validate() const;
};

struct WitnessRecord {
    std::string group;
    std::uint64_t tuple_index = 0;
    std::vector<std::size_t> element_indices;
    Vector alpha;
    Vector b;
    Matrix a;
};

struct GroupTrialResult {
    std::string group;
    std::uint64_t witnesses = 0;
    std::uint64_t tuples = 0;
    double millis = 0;  // timing, excluded from determinism
};

struct TrialRecord {
    std::uint64_t trial = 0;
    std::string digest;
    std::uint64_t degenerate_resamples = 0;
    bool not_applicable = false;  // last point off the prefix's affine hull
    std::vector<GroupTrialResult> groups;
    std::vector<WitnessRecord> witnesses;
    std::vector<Vector> points;  // kept only when the trial has witnesses

    bool discarded_degenerate() const { return degenerate_resamples > 0; }
    std::uint64_t witness_count() const;
};

struct ExperimentAggregate {
    std::uint64_t trials = 0;
    std::uint64_t witnesses = 0;
    std::uint64_t degenerate_resamples = 0;
    double wall_time_ms = 0;
};

struct ExperimentReport {
    int format_version = kReportFormatVersion;
    ExperimentPlan plan;
    std::vector<TrialRecord> trials;  // ascending trial index
    ExperimentAggregate aggregate;

    /// Aggregate totals equal the per-trial sums.
    bool aggregates_consistent() const;
};

/// Produces the configuration for a trial index. Must be a pure function of the index.
using ConfigurationSource = std::function<SampledConfiguration(std::uint64_t trial)>;

/// Exact sphere sampler keyed by (plan.d, plan.denom_bound, plan.seed, trial).
ConfigurationSource sphere_source(const ExperimentPlan& plan);

/// Runs every trial against every group. Witnesses are verified and recorded,
/// never treated as errors. `source` defaults to sphere_source(plan).
ExperimentReport run_experiment(const ExperimentPlan& plan, ConfigurationSource source = {});

/// Hex SHA-256 of the configuration's canonical text.
std::string configuration_digest(const PointConfiguration& config);

} // namespace affsub

#endif
