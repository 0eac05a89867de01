#include "affsub/cli.hpp"

#include "affsub/config_io.hpp"
#include "affsub/errors.hpp"
#include "affsub/experiment.hpp"
#include "affsub/group_spec.hpp"
#include "affsub/report.hpp"
#include "affsub/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

namespace affsub {

namespace {

struct TupleFlags {
    bool exhaustive = false;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    std::uint64_t cap = kDefaultTupleCap;

    void attach(CLI::App* cmd) {
        auto* ex = cmd->add_flag("--exhaustive", exhaustive, "Enumerate every tuple (default)");
        auto* sm = cmd->add_option("--sample", sample, "Decide N tuples drawn from --seed instead")->check(CLI::PositiveNumber);
        ex->excludes(sm);
        cmd->add_option("--tuple-cap", cap, "Refuse exhaustive spaces larger than this")->capture_default_str();
    }

    TupleMode mode() const { return sample ? TupleMode::sampled(seed, *sample) : TupleMode::exhaustive(cap); }
};

std::string describe(const TupleMode& mode) {
    if (mode.kind == TupleMode::Kind::Exhaustive) return "exhaustive";
    return "sampled(" + std::to_string(mode.count) + ", seed " + std::to_string(mode.seed) + ")";
}

int run_phi(const std::string& input, std::ostream& out) {
    const PointConfiguration config = read_configuration_file(input);
    const auto alpha = phi(config);
    if (!alpha) throw InputError("points: x_" + std::to_string(config.intrinsic_dim() + 1) +
                                 " lies outside the affine hull of the first d+1 points");
    out << to_string(alpha->values) << '\n';
    return exit_code::kOk;
}

int run_check(const std::string& input, const std::string& group_spec, const TupleFlags& flags, bool first,
              bool json, unsigned threads, std::ostream& out) {
    const PointConfiguration config = read_configuration_file(input);
    const FiniteMatrixGroup group = parse_group_spec(group_spec);
    const auto alpha = phi(config);
    if (!alpha) throw InputError("points: x_" + std::to_string(config.intrinsic_dim() + 1) +
                                 " lies outside the affine hull of the first d+1 points (not applicable)");
    SearchOptions options{flags.mode(), first, threads};
    SearchResult found = search_tuples(*alpha, group, options);

    CheckReport report{group.label(), config, *alpha, found.tuples_examined, {}};
    for (auto& w : found.witnesses) {
        auto composed = decide_configuration(config, w.tuple);
        report.witnesses.push_back(CheckWitness{std::move(w), std::move(*composed.map)});
    }
    if (json)
        out << check_report_to_json(report).dump(2) << '\n';
    else
        write_check_text(report, out);
    return exit_code::kOk;
}

int run_certify(const std::string& group_spec, std::size_t d, const TupleFlags& flags, bool json, std::ostream& out) {
    if (d < 1) throw InputError("d: must be >= 1");
    const FiniteMatrixGroup group = parse_group_spec(group_spec);
    const TupleEnumerator tuples(group, d + 1, flags.mode());
    std::uint64_t passed = 0;
    std::vector<GenericityCertificate> failures;
    for (std::uint64_t i = 0; i < tuples.size(); ++i) {
        auto cert = certify_generic(tuples.at(i));
        if (cert.passed)
            ++passed;
        else
            failures.push_back(std::move(cert));
    }
    const AlphaCoordinates star = witness_alpha(d);
    if (json) {
        nlohmann::json j{{"format_version", kReportFormatVersion},
                         {"command", "certify"},
                         {"group", group.label()},
                         {"d", d},
                         {"alpha", to_json(star.values)},
                         {"tuple_mode", describe(flags.mode())},
                         {"tuples", tuples.size()},
                         {"passed", passed},
                         {"failed", failures.size()}};
        auto fj = nlohmann::json::array();
        for (const auto& f : failures) {
            auto mats = nlohmann::json::array();
            for (const auto& g : f.instance.tuple.elements) mats.push_back(to_json(g.matrix()));
            fj.push_back({{"elements", f.instance.tuple.indices}, {"matrices", mats}, {"b", to_json(f.decision.b)}});
        }
        j["failures"] = fj;
        out << j.dump(2) << '\n';
    } else {
        out << "certify: group " << group.label() << " (order " << group.order() << ", n = " << group.dim()
            << "), d = " << d << ", alpha* = (" << to_string(star.values) << "), " << describe(flags.mode()) << '\n'
            << "passed: " << passed << "/" << tuples.size() << '\n'
            << "failed: " << failures.size() << '\n';
        for (const auto& f : failures) {
            out << "FAILED tuple elements (";
            for (std::size_t i = 0; i < f.instance.tuple.indices.size(); ++i)
                out << (i ? " " : "") << f.instance.tuple.indices[i];
            out << ")\n";
            for (const auto& g : f.instance.tuple.elements) out << "  g = " << g.matrix() << '\n';
            out << "  kernel vector outside Fix: (" << to_string(f.decision.b) << ")\n";
        }
    }
    return failures.empty() ? exit_code::kOk : exit_code::kFailure;
}

int run_montecarlo(const ExperimentPlan& plan, bool json, const std::string& csv_path, std::ostream& out) {
    const ExperimentReport report = run_experiment(plan);
    if (!report.aggregates_consistent())
        throw std::logic_error("montecarlo: aggregate totals do not match per-trial records");
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw InputError("csv: cannot write '" + csv_path + "'");
        write_csv(report, csv);
    }
    if (json)
        out << report_to_json(report).dump(2) << '\n';
    else
        write_summary(report, out);
    return exit_code::kOk;
}

int run_verify_report(const std::string& path, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw InputError("verify-report: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("verify-report: invalid JSON: ") + e.what());
    }
    const ReplayResult r = verify_report(j);
    out << "witnesses re-verified: " << r.witnesses_checked - r.failures.size() << "/" << r.witnesses_checked << '\n';
    for (const auto& f : r.failures) out << "FAILED " << f << '\n';
    return r.ok() ? exit_code::kOk : exit_code::kFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decision procedures for affine subtransitivity of point configurations"};
    app.require_subcommand(0, 1);

    std::string verify_path;
    app.add_option("--verify-report", verify_path, "Re-verify every witness in a JSON report and exit");

    std::string input;
    std::string group_spec;
    TupleFlags tuple_flags;
    bool first = false;
    bool json = false;
    unsigned threads = 1;

    auto* check = app.add_subcommand("check", "Search a group for tuples witnessing affine subtransitivity");
    check->add_option("--input", input, "Point configuration JSON")->required();
    check->add_option("--group", group_spec, "Group spec")->required();
    tuple_flags.attach(check);
    check->add_option("--seed", tuple_flags.seed, "Seed for --sample");
    check->add_flag("--first", first, "Stop at the first witnessing tuple");
    check->add_flag("--json", json, "Emit a JSON report");
    check->add_option("--threads", threads, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);

    std::size_t d = 0;
    auto* certify = app.add_subcommand("certify", "Check the genericity certificate at alpha* for every tuple");
    certify->add_option("--group", group_spec, "Group spec")->required();
    certify->add_option("--d", d, "Configuration dimension d (tuples have d+1 elements)")->required();
    tuple_flags.attach(certify);
    certify->add_option("--seed", tuple_flags.seed, "Seed for --sample");
    certify->add_flag("--json", json, "Emit a JSON report");

    ExperimentPlan plan;
    std::optional<std::uint64_t> mc_sample;
    std::string csv_path;
    auto* mc = app.add_subcommand("montecarlo", "Sample spherical configurations and search every group");
    mc->add_option("--d", plan.d, "Sphere S^{d-1} in Q^d")->required();
    mc->add_option("--trials", plan.trials, "Number of configurations")->required();
    mc->add_option("--seed", plan.seed, "Sampler seed")->required();
    mc->add_option("--denom-bound", plan.denom_bound, "Bound on stereographic numerators/denominators")->required();
    mc->add_option("--group", plan.group_specs, "Group spec (repeatable)")->required();
    mc->add_option("--sample", mc_sample, "Sample N tuples per group instead of exhaustive")->check(CLI::PositiveNumber);
    mc->add_option("--tuple-cap", tuple_flags.cap, "Refuse exhaustive spaces larger than this");
    mc->add_flag("--first", plan.stop_on_first_witness, "Stop each search at its first witness");
    mc->add_flag("--json", json, "Emit a JSON report");
    mc->add_option("--csv", csv_path, "Write per-trial CSV rows to this path");
    mc->add_option("--threads", plan.workers, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);

    auto* phi_cmd = app.add_subcommand("phi", "Print alpha = phi(x_0, ..., x_{d+1})");
    phi_cmd->add_option("--input", input, "Point configuration JSON")->required();

    auto* groups = app.add_subcommand("groups", "Group families");
    auto* groups_list = groups->add_subcommand("list", "List group spec syntax");
    groups->require_subcommand(1);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("affsub");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kBadInput;
    }

    try {
        if (!verify_path.empty()) return run_verify_report(verify_path, out);
        if (*check) return run_check(input, group_spec, tuple_flags, first, json, threads, out);
        if (*certify) return run_certify(group_spec, d, tuple_flags, json, out);
        if (*mc) {
            plan.tuple_mode = mc_sample ? TupleMode::sampled(0, *mc_sample) : TupleMode::exhaustive(tuple_flags.cap);
            return run_montecarlo(plan, json, csv_path, out);
        }
        if (*phi_cmd) return run_phi(input, out);
        if (*groups_list) {
            for (const auto& line : builtin_group_families()) out << line << '\n';
            return exit_code::kOk;
        }
        out << app.help();
        return exit_code::kBadInput;
    } catch (const CapError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kCapExceeded;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kBadInput;
    }
}

} // namespace affsub
