#ifndef AFFSUB_REPORT_HPP
#define AFFSUB_REPORT_HPP

#include "affsub/experiment.hpp"
#include "affsub/search.hpp"

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace affsub {

/// Versioned machine-readable report. The only timing field is
/// aggregate.wall_time_ms; see strip_timing().
nlohmann::json report_to_json(const ExperimentReport& report);

/// Copy of a report JSON without timing fields, for byte comparisons.
nlohmann::json strip_timing(nlohmann::json report);

/// Rows: trial,group,witnesses,degenerate,millis
void write_csv(const ExperimentReport& report, std::ostream& out);

void write_summary(const ExperimentReport& report, std::ostream& out);

/// One witnessing tuple of a check run, with its map on original coordinates.
struct CheckWitness {
    TupleWitness witness;
    AffineMap map;
};

struct CheckReport {
    std::string group;
    PointConfiguration config;
    AlphaCoordinates alpha;
    std::uint64_t tuples_examined = 0;
    std::vector<CheckWitness> witnesses;
};

nlohmann::json check_report_to_json(const CheckReport& report);
void write_check_text(const CheckReport& report, std::ostream& out);

struct ReplayResult {
    std::uint64_t witnesses_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Re-verifies every witness in a montecarlo or check report: the group is
/// rebuilt from its spec, the tuple from its element indices, and (b, A) is
/// checked with verify_witness. Montecarlo aggregates are re-summed too.
ReplayResult verify_report(const nlohmann::json& report);

} // namespace affsub

#endif
