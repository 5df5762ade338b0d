#include "erd/json_io.hpp"

#include <cmath>
#include <limits>

namespace erd {

using nlohmann::ordered_json;

namespace {

// JSON has no inf/nan; a vacuous bound still has to survive a round trip.
ordered_json bound_to_json(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

double bound_from_json(const ordered_json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        return std::numeric_limits<double>::quiet_NaN();
    }
    return j.get<double>();
}

} // namespace

ordered_json to_json(Complex z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json to_json(const EvalResult& r) {
    return ordered_json{{"value_re", r.value.real()},
                        {"value_im", r.value.imag()},
                        {"terms_used", r.terms_used},
                        {"tail_bound", r.tail_bound}};
}

ordered_json to_json(const IdentityReport& r) {
    ordered_json inputs = ordered_json::object();
    for (const auto& [key, value] : r.inputs) inputs[key] = value;
    ordered_json j{{"check_name", r.check_name},
                   {"inputs", std::move(inputs)},
                   {"lhs", to_json(r.lhs)},
                   {"rhs", to_json(r.rhs)},
                   {"abs_residual", bound_to_json(r.abs_residual)},
                   {"tail_bound", bound_to_json(r.tail_bound)},
                   {"terms_used", r.terms_used},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

ordered_json to_json(const Prop7Report& r) {
    ordered_json table = ordered_json::array();
    for (const auto& row : r.per_term_table)
        table.push_back(ordered_json{{"term", row.term},
                                     {"quadrature", to_json(row.quadrature)},
                                     {"paper", to_json(row.paper)},
                                     {"discrepancy", row.discrepancy}});
    return ordered_json{{"gamma_direct", to_json(r.gamma_direct)},
                        {"abel_quadrature_sum", to_json(r.abel_quadrature_sum)},
                        {"paper_rhs", to_json(r.paper_rhs)},
                        {"corrected_rhs", to_json(r.corrected_rhs)},
                        {"per_term_table", std::move(table)},
                        {"pass_abel", r.pass_abel},
                        {"notes", r.notes}};
}

IdentityReport identity_report_from_json(const ordered_json& j) {
    IdentityReport r;
    r.check_name = j.at("check_name").get<std::string>();
    for (const auto& [key, value] : j.at("inputs").items())
        r.inputs.emplace_back(key, value.get<double>());
    r.lhs = {j.at("lhs").at("re").get<double>(), j.at("lhs").at("im").get<double>()};
    r.rhs = {j.at("rhs").at("re").get<double>(), j.at("rhs").at("im").get<double>()};
    r.abs_residual = bound_from_json(j.at("abs_residual"));
    r.tail_bound = bound_from_json(j.at("tail_bound"));
    r.terms_used = j.at("terms_used").get<std::size_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::string>();
    return r;
}

} // namespace erd
