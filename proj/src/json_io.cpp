#include "sosgap/json_io.hpp"

namespace sosgap {

ordered_json point_set_to_json(const PointSet& s) {
    ordered_json j;
    j["n"] = s.n();
    j["label"] = s.label();
    ordered_json pts = ordered_json::array();
    for (const auto& p : s.points()) {
        ordered_json row = ordered_json::array();
        for (const auto& x : p) row.push_back(x.str());
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

PointSet point_set_from_json(const ordered_json& j) {
    int n = j.at("n").get<int>();
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    std::vector<std::vector<Rational>> pts;
    for (const auto& row : j.at("points")) {
        std::vector<Rational> p;
        for (const auto& x : row) p.push_back(Rational::parse(x.get<std::string>()));
        pts.push_back(std::move(p));
    }
    return PointSet(n, std::move(pts), std::move(label));
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json roundness_to_json(const RoundnessCertificate& c) {
    ordered_json j;
    j["form"] = c.form.str();
    j["points"] = point_set_to_json(c.points);
    ordered_json per = ordered_json::array();
    for (const auto& pr : c.per_point) {
        ordered_json e;
        e["hessian"] = matrix_to_json(pr.hessian);
        e["perp_basis"] = matrix_to_json(pr.perp_basis);
        e["positive_definite"] = pr.positive_definite;
        per.push_back(std::move(e));
    }
    j["per_point"] = std::move(per);
    j["valid"] = c.valid;
    return j;
}

ordered_json fulldim_to_json(const FullDimCertificate& c) {
    ordered_json j;
    j["certificate"] = roundness_to_json(c.certificate);
    j["condition1"] = to_string(c.condition1);
    j["double_vanishing_dim"] = c.double_vanishing_dim;
    j["full_dimensional_claim"] = c.full_dimensional_claim;
    j["assumptions"] = c.assumptions;
    return j;
}

ordered_json zero_search_to_json(const ZeroSearchReport& r) {
    ordered_json j;
    j["samples"] = r.samples;
    ordered_json bp = ordered_json::array();
    for (const auto& x : r.best_point) bp.push_back(x.str());
    j["best_point"] = std::move(bp);
    j["best_value"] = r.best_value.str();
    j["refinement_steps"] = r.refinement_steps;
    j["verdict"] = to_string(r.verdict);
    return j;
}

ordered_json gap_report_to_json(const GapReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["gap_max"] = r.gap_max.get_str();
    j["k_max"] = r.k_max.get_str();
    if (r.k_min_positive)
        j["k_min_positive"] = r.k_min_positive->get_str();
    else
        j["k_min_positive"] = nullptr;
    if (!r.g_values.empty()) {
        ordered_json table = ordered_json::array();
        for (const auto& [k, g] : r.g_values) {
            ordered_json e;
            e["k"] = k.get_str();
            e["g"] = g.get_str();
            table.push_back(std::move(e));
        }
        j["g_values"] = std::move(table);
    }
    return j;
}

ordered_json independence_to_json(const IndependenceVerdict& v) {
    ordered_json j;
    j["condition2_holds"] = v.condition2_holds;
    j["per_point_codimension"] = v.per_point_codimension;
    j["condition1"] = to_string(v.condition1);
    if (v.condition1_witness) {
        ordered_json w = ordered_json::array();
        for (const auto& x : *v.condition1_witness) w.push_back(x.str());
        j["condition1_witness"] = std::move(w);
    }
    if (!v.condition2_witnesses.empty()) {
        ordered_json ws = ordered_json::array();
        for (const auto& [idx, form] : v.condition2_witnesses) {
            ordered_json e;
            e["point_index"] = idx;
            e["form"] = form.str();
            ws.push_back(std::move(e));
        }
        j["condition2_witnesses"] = std::move(ws);
    }
    return j;
}

Check make_check(const std::string& name, const std::string& expected, const std::string& actual) {
    return Check{name, expected, actual, expected == actual, false};
}

Check make_check(const std::string& name, const Rational& expected, const Rational& actual) {
    return Check{name, expected.str(), actual.str(), expected == actual, false};
}

Check make_check(const std::string& name, const Int& expected, const Int& actual) {
    return Check{name, expected.get_str(), actual.get_str(), expected == actual, false};
}

Check make_check(const std::string& name, bool expected, bool actual) {
    auto s = [](bool b) { return b ? std::string("true") : std::string("false"); };
    return Check{name, s(expected), s(actual), expected == actual, false};
}

bool RunReport::all_exact_pass() const {
    for (const auto& c : checks)
        if (!c.heuristic && !c.pass) return false;
    return true;
}

ordered_json run_report_to_json(const RunReport& r) {
    ordered_json j;
    j["command"] = r.command;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        e["verdict"] = c.pass ? "pass" : (c.heuristic ? "heuristic" : "fail");
        if (c.heuristic) e["heuristic"] = true;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_exact_pass"] = r.all_exact_pass();
    return j;
}

}  // namespace sosgap
