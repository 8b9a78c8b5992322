#include "cliquebound/report.hpp"

#include <sstream>

namespace cliquebound {

nlohmann::json to_json(const VerifyReport& r, bool include_timing) {
    nlohmann::json j{
        {"theorem", r.theorem},
        {"n", r.n},
        {"k", r.k},
        {"s", r.s},
        {"bound", r.bound.to_string()},
        {"bound_floor", to_string(r.bound_floor)},
        {"observed_max", r.observed_max},
        {"holds", r.holds},
        {"attainment_expected", r.attainment_expected},
        {"attained", r.attained},
        {"construction_attains", r.construction_attains},
        {"achievers", r.achievers},
        {"achievers_truncated", r.achievers_truncated},
        {"achiever_count", r.achiever_count},
        {"expected_achievers", r.expected_achievers},
        {"graphs_enumerated", r.graphs_enumerated},
        {"graphs_in_class", r.graphs_in_class},
        {"complete", r.complete},
    };
    if (r.uniqueness_checked) j["uniqueness_holds"] = r.uniqueness_holds;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

std::string tsv_header() {
    return "theorem\tn\tk\ts\tbound\tobserved_max\tholds\tattained\t"
           "graphs_enumerated\tgraphs_in_class\tcomplete\telapsed_seconds";
}

std::string to_tsv_row(const VerifyReport& r, bool include_timing) {
    std::ostringstream out;
    out << r.theorem << '\t' << r.n << '\t' << r.k << '\t' << r.s << '\t'
        << r.bound.to_string() << '\t' << r.observed_max << '\t'
        << (r.holds ? "true" : "false") << '\t' << (r.attained ? "true" : "false") << '\t'
        << r.graphs_enumerated << '\t' << r.graphs_in_class << '\t'
        << (r.complete ? "true" : "false") << '\t';
    if (include_timing)
        out << r.elapsed_seconds;
    else
        out << "-";
    return out.str();
}

nlohmann::json to_json(const PropertySuiteReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"property", f.property}, {"graph6", f.graph6}, {"detail", f.detail}});
    return nlohmann::json{{"seed", r.seed},
                          {"samples", r.samples},
                          {"checks_run", r.checks_run},
                          {"complete", r.complete},
                          {"failures", failures}};
}

}  // namespace cliquebound
