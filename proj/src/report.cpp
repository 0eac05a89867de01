#include "affsub/report.hpp"

#include "affsub/config_io.hpp"
#include "affsub/errors.hpp"
#include "affsub/group_spec.hpp"

#include <iomanip>
#include <map>

namespace affsub {

namespace {

nlohmann::json witness_to_json(const WitnessRecord& w) {
    return {{"group", w.group},     {"tuple_index", w.tuple_index}, {"elements", w.element_indices},
            {"alpha", to_json(w.alpha)}, {"b", to_json(w.b)},            {"A", to_json(w.a)}};
}

nlohmann::json plan_to_json(const ExperimentPlan& plan) {
    nlohmann::json j{{"d", plan.d},
                     {"groups", plan.group_specs},
                     {"trials", plan.trials},
                     {"seed", plan.seed},
                     {"denom_bound", plan.denom_bound},
                     {"stop_on_first_witness", plan.stop_on_first_witness}};
    if (plan.tuple_mode.kind == TupleMode::Kind::Exhaustive)
        j["tuple_mode"] = {{"kind", "exhaustive"}, {"cap", plan.tuple_mode.cap}};
    else
        j["tuple_mode"] = {{"kind", "sampled"}, {"count", plan.tuple_mode.count}};
    return j;
}

} // namespace

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["format_version"] = report.format_version;
    j["command"] = "montecarlo";
    j["plan"] = plan_to_json(report.plan);
    auto trials = nlohmann::json::array();
    for (const auto& t : report.trials) {
        nlohmann::json tj{{"trial", t.trial},
                          {"digest", t.digest},
                          {"degenerate_resamples", t.degenerate_resamples},
                          {"discarded_degenerate", t.discarded_degenerate()},
                          {"not_applicable", t.not_applicable}};
        auto groups = nlohmann::json::array();
        for (const auto& g : t.groups) groups.push_back({{"group", g.group}, {"witnesses", g.witnesses}, {"tuples", g.tuples}});
        tj["groups"] = groups;
        auto ws = nlohmann::json::array();
        for (const auto& w : t.witnesses) ws.push_back(witness_to_json(w));
        tj["witnesses"] = ws;
        if (!t.points.empty()) {
            auto pts = nlohmann::json::array();
            for (const auto& p : t.points) pts.push_back(to_json(p));
            tj["points"] = pts;
        }
        trials.push_back(std::move(tj));
    }
    j["trials"] = std::move(trials);
    j["aggregate"] = {{"trials", report.aggregate.trials},
                      {"witnesses", report.aggregate.witnesses},
                      {"degenerate_resamples", report.aggregate.degenerate_resamples},
                      {"wall_time_ms", report.aggregate.wall_time_ms}};
    return j;
}

nlohmann::json strip_timing(nlohmann::json report) {
    if (report.contains("aggregate")) report["aggregate"].erase("wall_time_ms");
    return report;
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
    out << "trial,group,witnesses,degenerate,millis\n";
    for (const auto& t : report.trials)
        for (const auto& g : t.groups)
            out << t.trial << ',' << g.group << ',' << g.witnesses << ',' << t.degenerate_resamples << ','
                << std::fixed << std::setprecision(3) << g.millis << '\n';
}

void write_summary(const ExperimentReport& report, std::ostream& out) {
    const auto& plan = report.plan;
    out << "montecarlo: d=" << plan.d << " trials=" << plan.trials << " seed=" << plan.seed
        << " denom_bound=" << plan.denom_bound << '\n';
    std::map<std::string, std::uint64_t> per_group;
    std::uint64_t not_applicable = 0;
    for (const auto& t : report.trials) {
        not_applicable += t.not_applicable ? 1 : 0;
        for (const auto& g : t.groups) per_group[g.group] += g.witnesses;
    }
    for (const auto& spec : plan.group_specs) out << "  group " << spec << ": " << per_group[spec] << " witnesses\n";
    for (const auto& t : report.trials)
        for (const auto& w : t.witnesses)
            out << "  witness: trial " << t.trial << " (" << t.digest.substr(0, 16) << ") group " << w.group
                << " tuple #" << w.tuple_index << " b = (" << to_string(w.b) << ")\n";
    out << "total trials: " << report.aggregate.trials << '\n'
        << "total witnesses: " << report.aggregate.witnesses << '\n'
        << "degenerate resamples: " << report.aggregate.degenerate_resamples << '\n';
    if (not_applicable) out << "not applicable trials: " << not_applicable << '\n';
    out << "wall time: " << std::fixed << std::setprecision(1) << report.aggregate.wall_time_ms << " ms\n";
}

nlohmann::json check_report_to_json(const CheckReport& report) {
    nlohmann::json j;
    j["format_version"] = kReportFormatVersion;
    j["command"] = "check";
    j["group"] = report.group;
    j["configuration"] = configuration_to_json(report.config);
    j["alpha"] = to_json(report.alpha.values);
    j["tuples_examined"] = report.tuples_examined;
    auto ws = nlohmann::json::array();
    for (const auto& cw : report.witnesses) {
        const auto& w = cw.witness;
        ws.push_back({{"group", report.group},
                      {"tuple_index", w.tuple_index},
                      {"elements", w.tuple.indices},
                      {"alpha", to_json(report.alpha.values)},
                      {"b", to_json(w.decision.b)},
                      {"A", to_json(w.decision.a)},
                      {"map", {{"linear", to_json(cw.map.linear)}, {"offset", to_json(cw.map.offset)}}}});
    }
    j["witnesses"] = std::move(ws);
    return j;
}

void write_check_text(const CheckReport& report, std::ostream& out) {
    out << "group: " << report.group << '\n'
        << "alpha: " << to_string(report.alpha.values) << '\n'
        << "tuples examined: " << report.tuples_examined << '\n';
    if (report.witnesses.empty()) {
        out << "none found\n";
        return;
    }
    out << "witnesses: " << report.witnesses.size() << '\n';
    for (const auto& cw : report.witnesses) {
        const auto& w = cw.witness;
        out << "tuple #" << w.tuple_index << " elements (";
        for (std::size_t i = 0; i < w.tuple.indices.size(); ++i) out << (i ? " " : "") << w.tuple.indices[i];
        out << ")\n"
            << "  b = (" << to_string(w.decision.b) << ")\n"
            << "  A = " << w.decision.a << '\n'
            << "  f(x) = " << cw.map.linear << " x + (" << to_string(cw.map.offset) << ")\n"
            << "  verified\n";
    }
}

ReplayResult verify_report(const nlohmann::json& report) {
    if (!report.is_object() || !report.contains("format_version"))
        throw InputError("report: missing format_version");
    if (report["format_version"] != kReportFormatVersion)
        throw InputError("report: unsupported format_version " + report["format_version"].dump());

    ReplayResult result;
    std::map<std::string, FiniteMatrixGroup> groups;
    auto check = [&](const nlohmann::json& w, const std::string& where) {
        ++result.witnesses_checked;
        try {
            const std::string spec = w.at("group").get<std::string>();
            auto it = groups.find(spec);
            if (it == groups.end()) it = groups.emplace(spec, parse_group_spec(spec)).first;
            const auto indices = w.at("elements").get<std::vector<std::size_t>>();
            for (auto i : indices)
                if (i >= it->second.order()) throw InputError("element index out of range");
            SubtransInstance inst{AlphaCoordinates{vector_from_json(w.at("alpha"), where + ".alpha")},
                                  tuple_from_indices(it->second, indices)};
            if (!verify_witness(inst, vector_from_json(w.at("b"), where + ".b"), matrix_from_json(w.at("A"), where + ".A")))
                result.failures.push_back(where + ": witness does not verify");
        } catch (const std::exception& e) {
            result.failures.push_back(where + ": " + e.what());
        }
    };

    if (report.contains("trials")) {
        std::uint64_t witnesses = 0;
        std::uint64_t resamples = 0;
        const auto& trials = report["trials"];
        for (std::size_t t = 0; t < trials.size(); ++t) {
            const auto& tj = trials[t];
            for (const auto& g : tj.at("groups")) witnesses += g.at("witnesses").get<std::uint64_t>();
            resamples += tj.at("degenerate_resamples").get<std::uint64_t>();
            const auto& ws = tj.at("witnesses");
            for (std::size_t i = 0; i < ws.size(); ++i)
                check(ws[i], "trials[" + std::to_string(t) + "].witnesses[" + std::to_string(i) + "]");
        }
        const auto& agg = report.at("aggregate");
        if (agg.at("trials").get<std::uint64_t>() != trials.size() || agg.at("witnesses").get<std::uint64_t>() != witnesses ||
            agg.at("degenerate_resamples").get<std::uint64_t>() != resamples)
            result.failures.push_back("aggregate: totals do not match per-trial records");
    } else if (report.contains("witnesses")) {
        const auto& ws = report["witnesses"];
        for (std::size_t i = 0; i < ws.size(); ++i) check(ws[i], "witnesses[" + std::to_string(i) + "]");
    } else {
        throw InputError("report: neither trials nor witnesses present");
    }
    return result;
}

} // namespace affsub
