#include "capelli/report.hpp"

#include <fstream>
#include <iostream>

#include "capelli/division_algebra.hpp"
#include "capelli/sign_matrix.hpp"

namespace capelli {

using nlohmann::json;

namespace {

json diag_json(const DiagSpec& d) {
    json a = json::array();
    for (const auto& v : d) a.push_back(v.str());
    return a;
}

} // namespace

json to_json(const DetStats& s) {
    json layers = json::array();
    for (const auto& l : s.layers) {
        layers.push_back({{"layer", l.layer},
                          {"states", l.states},
                          {"terms", l.terms},
                          {"max_state_terms", l.max_state_terms},
                          {"coeff_units", l.coeff_units},
                          {"elapsed_ms", l.elapsed_ms}});
    }
    return {{"layers", layers},
            {"peak_terms", s.peak_terms},
            {"peak_bytes_estimate", s.peak_bytes_estimate}};
}

json to_json(const VerificationReport& r) {
    return {{"schema", kReportSchema},
            {"command", "verify"},
            {"table_name", r.table_name},
            {"diag", diag_json(r.diag)},
            {"identity_holds", r.identity_holds},
            {"residual_terms", r.residual_terms},
            {"residual_sample", r.residual_sample},
            {"lhs_terms", r.lhs_terms},
            {"rhs_terms", r.rhs_terms},
            {"det_order", r.det_order},
            {"threads", r.threads},
            {"dp_layer_stats", to_json(r.det_stats)},
            {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const SearchReport& r) {
    json sat = json::array();
    for (const auto& d : r.satisfying) sat.push_back(diag_json(d));
    return {{"schema", kReportSchema},
            {"command", "search-diag"},
            {"table_name", r.table_name},
            {"multiset", diag_json(r.multiset)},
            {"satisfying_diags", sat},
            {"candidates_tested", r.candidates_tested},
            {"constraint_count", r.constraint_count},
            {"residual_terms", r.residual_terms},
            {"lhs_terms", r.lhs_terms},
            {"rhs_terms", r.rhs_terms},
            {"threads", r.threads},
            {"dp_layer_stats", to_json(r.det_stats)},
            {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const ActionReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"s", c.s},
                          {"scalar", c.scalar.str()},
                          {"det_b_scales", c.det_b_scales},
                          {"diagonal_scales", c.diagonal_scales},
                          {"offdiag_annihilates", c.offdiag_annihilates}});
    }
    return {{"schema", kReportSchema},
            {"command", "action-report"},
            {"table_name", r.table_name},
            {"checks", checks},
            {"all_ok", r.all_ok}};
}

json table_report(const std::string& name, const TableMatrix& t) {
    const PropertyReport pr = check_properties(t);
    json j = {{"schema", kReportSchema},
              {"command", "check-table"},
              {"table_name", name},
              {"n", t.dim()},
              {"prop_i", pr.prop_i},
              {"prop_ii", pr.prop_ii},
              {"prop_iii", pr.prop_iii},
              {"admissible", pr.all()},
              {"violation", pr.violation}};
    if (pr.all()) {
        const auto norm = normalize(t);
        j["normalized"] = is_normalized(t);
        j["normalize_moves"] = norm.moves;
        const auto alg = build_algebra(norm.table, false);
        j["anticommutation"] = check_anticommutation(norm.table);
        j["skew_products"] = check_skew_products(norm.table);
        j["norm_multiplicative"] = norm_multiplicative(alg, 200);
        j["alternative"] = check_alternative(alg, 100);
        const auto bad = find_nonassociative_triple(alg);
        j["associative"] = !bad.has_value();
        if (t.dim() == 4) j["triple_sign"] = triple_sign(norm.table);
    }
    return j;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

json strip_timings(json j) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (k == "elapsed_ms") v = 0;
            else v = strip_timings(v);
        }
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timings(v);
    }
    return j;
}

void write_report(const json& j, const std::string& path_or_empty) {
    if (path_or_empty.empty()) {
        std::cout << render(j);
    } else {
        std::ofstream os(path_or_empty);
        if (!os) throw std::runtime_error("cannot write report: " + path_or_empty);
        os << render(j);
    }
}

} // namespace capelli
