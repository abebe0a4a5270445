#ifndef BOREL_REPORT_IO_HPP
#define BOREL_REPORT_IO_HPP

// JSON and CSV rendering for the report types. Certified endpoints are
// serialized as decimal strings (never binary floats) so the digits
// survive the trip.

#include <string>
#include <vector>

#include <json.hpp>

#include "borel/bounds.hpp"
#include "borel/format.hpp"
#include "borel/interval.hpp"
#include "borel/lemma.hpp"
#include "borel/scenario.hpp"

namespace borel {

inline nlohmann::json enclosure_json(const Enclosure& e) {
    return nlohmann::json{{"lo", e.lo_string()}, {"hi", e.hi_string()}, {"digits", e.digits}};
}

inline std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string enclosure_csv(const Enclosure& e) {
    return "lo,hi,digits\n" + e.lo_string() + "," + e.hi_string() + "," +
           std::to_string(e.digits) + "\n";
}

inline nlohmann::json check_entry_json(const CheckEntry& c) {
    return nlohmann::json{{"id", c.id},
                          {"claim", c.claim},
                          {"computed_lo", c.computed_lo},
                          {"computed_hi", c.computed_hi},
                          {"pass", c.pass}};
}

inline nlohmann::json repro_json(const ReproReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) entries.push_back(check_entry_json(e));
    return nlohmann::json{{"tool", r.tool},
                          {"version", r.version},
                          {"digits", r.digits},
                          {"entries", entries},
                          {"all_pass", r.all_pass}};
}

inline std::string repro_csv(const ReproReport& r) {
    std::string out = "id,claim,computed_lo,computed_hi,pass\n";
    for (const auto& e : r.entries) {
        out += csv_quote(e.id) + "," + csv_quote(e.claim) + "," + csv_quote(e.computed_lo) +
               "," + csv_quote(e.computed_hi) + "," + (e.pass ? "true" : "false") + "\n";
    }
    return out;
}

inline nlohmann::json scan_json(const ScanResult& sr, const Enclosure& bound) {
    nlohmann::json ivs = nlohmann::json::array();
    for (const auto& iv : sr.violations.intervals()) {
        ivs.push_back({format_double(iv.lo), format_double(iv.hi)});
    }
    const double m = measure(sr.violations);
    return nlohmann::json{{"intervals", ivs},
                          {"total_measure", format_double(m)},
                          {"bound", enclosure_json(bound)},
                          {"within_bound", m <= bound.hi_double() + 1e-9},
                          {"grid", sr.grid},
                          {"tol", format_double(sr.tol)},
                          {"warnings", sr.warnings}};
}

inline std::string scan_csv(const ScanResult& sr, const Enclosure& bound) {
    std::string out = "kind,lo,hi\n";
    for (const auto& iv : sr.violations.intervals()) {
        out += "interval," + format_double(iv.lo) + "," + format_double(iv.hi) + "\n";
    }
    const double m = measure(sr.violations);
    out += "total_measure," + format_double(m) + ",\n";
    out += "bound," + bound.lo_string() + "," + bound.hi_string() + "\n";
    out += std::string("within_bound,") + (m <= bound.hi_double() + 1e-9 ? "true" : "false") +
           ",\n";
    return out;
}

inline nlohmann::json cover_json(const CoverSequence& cover, const Enclosure& bound) {
    nlohmann::json steps = nlohmann::json::array();
    bool chain_ok = true;
    for (const auto& st : cover.steps) {
        const bool ok = st.r_prime - st.r <= st.certified_length_bound + 1e-9;
        chain_ok = chain_ok && ok;
        steps.push_back({{"r", format_double(st.r)},
                         {"r_prime", format_double(st.r_prime)},
                         {"certified_length_bound", format_double(st.certified_length_bound)},
                         {"threshold_value", format_double(st.threshold_value)},
                         {"within_chain_bound", ok}});
    }
    return nlohmann::json{{"steps", steps},
                          {"exhausted", cover.exhausted},
                          {"total_length", format_double(cover.total_length())},
                          {"bound", enclosure_json(bound)},
                          {"chain_ok", chain_ok}};
}

inline std::string cover_csv(const CoverSequence& cover, const Enclosure& bound) {
    std::string out = "r,r_prime,certified_length_bound,threshold_value\n";
    for (const auto& st : cover.steps) {
        out += format_double(st.r) + "," + format_double(st.r_prime) + "," +
               format_double(st.certified_length_bound) + "," +
               format_double(st.threshold_value) + "\n";
    }
    out += "total_length," + format_double(cover.total_length()) + ",,\n";
    out += "bound," + bound.lo_string() + "," + bound.hi_string() + ",\n";
    out += std::string("exhausted,") + (cover.exhausted ? "true" : "false") + ",,\n";
    return out;
}

inline nlohmann::json scenario_json(const ScenarioReport& sc) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : sc.checks) checks.push_back(check_entry_json(c));
    return nlohmann::json{{"r0", format_double(sc.r0)},
                          {"r0_prime", format_double(sc.r0_prime)},
                          {"gap", format_double(sc.gap)},
                          {"d", format_double(sc.d)},
                          {"growth", sc.growth_text},
                          {"e_doubleprime_measure", format_double(sc.e_doubleprime_measure)},
                          {"e_prime_bound", enclosure_json(sc.e_prime_bound)},
                          {"total_bound", enclosure_json(sc.total_bound)},
                          {"checks", checks},
                          {"all_pass", sc.all_pass}};
}

inline nlohmann::json bound_report_json(const BoundReport& br) {
    return nlohmann::json{{"variant", variant_name(br.variant)},
                          {"r", format_double(br.r)},
                          {"T_at_r", format_double(br.T_at_r)},
                          {"R", format_double(br.R)},
                          {"lhs", format_double(br.lhs_eq4)},
                          {"bound", format_double(br.bound_value)},
                          {"dominated", br.dominated}};
}

}  // namespace borel

#endif  // BOREL_REPORT_IO_HPP
