#pragma once

#include <json.hpp>

#include "sosgap/apolar.hpp"
#include "sosgap/certify.hpp"
#include "sosgap/gap_bounds.hpp"
#include "sosgap/point_ideals.hpp"

namespace sosgap {

using ordered_json = nlohmann::ordered_json;

/// {"n": int, "label": string, "points": [["num/den", ...], ...]}.
/// Round-trips bit-exactly.
ordered_json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const ordered_json& j);

ordered_json matrix_to_json(const Matrix& m);

ordered_json roundness_to_json(const RoundnessCertificate& c);

ordered_json fulldim_to_json(const FullDimCertificate& c);

ordered_json zero_search_to_json(const ZeroSearchReport& r);

ordered_json gap_report_to_json(const GapReport& r);

ordered_json independence_to_json(const IndependenceVerdict& v);

/// One named exact check inside a run report.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool heuristic = false;  // heuristic checks are listed but never fail a run
};

Check make_check(const std::string& name, const std::string& expected, const std::string& actual);
Check make_check(const std::string& name, const Rational& expected, const Rational& actual);
Check make_check(const std::string& name, const Int& expected, const Int& actual);
Check make_check(const std::string& name, bool expected, bool actual);

struct RunReport {
    std::string command;
    std::vector<Check> checks;
    double elapsed_seconds = 0.0;  // printed to stderr, never serialized

    bool all_exact_pass() const;
};

/// Serializes command echo and per-check results; excludes timing so output
/// is byte-identical across runs with identical inputs and seeds.
ordered_json run_report_to_json(const RunReport& r);

}  // namespace sosgap
