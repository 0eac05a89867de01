#include "affsub/experiment.hpp"

#include "affsub/errors.hpp"
#include "affsub/group_spec.hpp"
#include "affsub/search.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

namespace affsub {

void ExperimentPlan::validate() const {
    if (d < 2) throw InputError("d: must be >= 2");
    if (trials < 1) throw InputError("trials: must be >= 1");
    if (denom_bound < 1) throw InputError("denom-bound: must be >= 1");
    if (group_specs.empty()) throw InputError("group: at least one group spec is required");
    if (tuple_mode.kind == TupleMode::Kind::Sampled && tuple_mode.count == 0)
        throw InputError("sample: tuple count must be >= 1");
}

std::uint64_t TrialRecord::witness_count() const {
    std::uint64_t total = 0;
    for (const auto& g : groups) total += g.witnesses;
    return total;
}

bool ExperimentReport::aggregates_consistent() const {
    std::uint64_t witnesses = 0;
    std::uint64_t resamples = 0;
    for (const auto& t : trials) {
        witnesses += t.witness_count();
        resamples += t.degenerate_resamples;
    }
    return aggregate.trials == trials.size() && aggregate.witnesses == witnesses &&
           aggregate.degenerate_resamples == resamples;
}

std::string configuration_digest(const PointConfiguration& config) {
    const std::string text = config.canonical_text();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

ConfigurationSource sphere_source(const ExperimentPlan& plan) {
    return [d = plan.d, bound = plan.denom_bound, seed = plan.seed](std::uint64_t trial) {
        return sample_spherical_configuration(d, bound, seed, trial);
    };
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

TrialRecord run_trial(const ExperimentPlan& plan, const std::vector<FiniteMatrixGroup>& groups,
                      const ConfigurationSource& source, std::uint64_t trial) {
    SampledConfiguration sample = source(trial);
    const PointConfiguration& config = sample.config;
    if (config.intrinsic_dim() != plan.d)
        throw InputError("configuration source returned d = " + std::to_string(config.intrinsic_dim()) +
                         ", plan has d = " + std::to_string(plan.d));

    TrialRecord record;
    record.trial = trial;
    record.digest = configuration_digest(config);
    record.degenerate_resamples = sample.degenerate_resamples;

    const auto alpha = phi(config);
    if (!alpha) {
        record.not_applicable = true;
        return record;
    }

    for (const auto& group : groups) {
        const auto start = Clock::now();
        SearchOptions options;
        options.stop_on_first = plan.stop_on_first_witness;
        options.mode = plan.tuple_mode;
        if (options.mode.kind == TupleMode::Kind::Sampled)
            options.mode.seed = plan.seed ^ (0x9E3779B97F4A7C15ull * (trial + 1));
        const SearchResult found = search_tuples(*alpha, group, options);

        GroupTrialResult result{group.label(), found.witnesses.size(), found.tuples_examined, 0};
        for (const auto& w : found.witnesses)
            record.witnesses.push_back(
                WitnessRecord{group.label(), w.tuple_index, w.tuple.indices, alpha->values, w.decision.b, w.decision.a});
        result.millis = millis_since(start);
        record.groups.push_back(std::move(result));
    }
    if (!record.witnesses.empty()) record.points = config.points();
    return record;
}

} // namespace

ExperimentReport run_experiment(const ExperimentPlan& plan, ConfigurationSource source) {
    plan.validate();
    const auto start = Clock::now();
    if (!source) source = sphere_source(plan);

    std::vector<FiniteMatrixGroup> groups;
    for (const auto& spec : plan.group_specs) groups.push_back(parse_group_spec(spec, plan.closure_cap));
    // Fail fast on oversized tuple spaces rather than inside a trial.
    for (const auto& g : groups) TupleEnumerator(g, plan.d + 1, plan.tuple_mode);

    ExperimentReport report;
    report.plan = plan;
    report.trials.resize(plan.trials);

    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(plan.workers, 1, plan.trials));
    if (workers == 1) {
        for (std::uint64_t t = 0; t < plan.trials; ++t) report.trials[t] = run_trial(plan, groups, source, t);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::uint64_t t = w; t < plan.trials; t += workers)
                        report.trials[t] = run_trial(plan, groups, source, t);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    report.aggregate.trials = report.trials.size();
    for (const auto& t : report.trials) {
        report.aggregate.witnesses += t.witness_count();
        report.aggregate.degenerate_resamples += t.degenerate_resamples;
    }
    report.aggregate.wall_time_ms = millis_since(start);
    return report;
}

} // namespace affsub
