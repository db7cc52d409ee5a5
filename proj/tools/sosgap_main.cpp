#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "sosgap/apolar.hpp"
#include "sosgap/certify.hpp"
#include "sosgap/constructions.hpp"
#include "sosgap/gap_bounds.hpp"
#include "sosgap/json_io.hpp"

namespace {

using namespace sosgap;
using Clock = std::chrono::steady_clock;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SOSGAP_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int finish_report(RunReport& rep, Clock::time_point t0) {
    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    emit(run_report_to_json(rep));
    std::cerr << "elapsed: " << rep.elapsed_seconds << " s\n";
    return rep.all_exact_pass() ? 0 : 1;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_dims(const std::string& points_file, int degree) {
    std::ifstream in(points_file);
    if (!in) {
        std::cerr << "cannot open " << points_file << "\n";
        return 2;
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    }
    try {
        PointSet s = point_set_from_json(j);
        auto v = vanishing_space(s, degree);
        auto dv = double_vanishing_space(s, 2 * degree);
        auto sq = squares_span(s, degree);
        ordered_json out;
        out["command"] = "dims";
        out["label"] = s.label();
        out["n"] = s.n();
        out["points"] = s.size();
        out["degree"] = degree;
        out["dim_vanishing"] = v.dim();
        out["dim_double_vanishing"] = dv.dim();
        out["dim_squares_span"] = sq.dim();
        out["ah_expected"] =
            expected_dimension_ah(s.n(), 2 * degree, Int(static_cast<long>(s.size()))).get_str();
        out["gap_at_s"] = dv.dim() - sq.dim();
        emit(out);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

RunReport verify_six_points(std::uint64_t seed) {
    RunReport rep;
    rep.command = "verify six-points";
    PointSet six = six_point_set();
    auto v = vanishing_space(six, 2);
    auto dv = double_vanishing_space(six, 4);
    auto sq = squares_span(six, 2);
    rep.checks.push_back(make_check("dim_vanishing", Int(4), Int(v.dim())));
    rep.checks.push_back(make_check("dim_double_vanishing", Int(11), Int(dv.dim())));
    rep.checks.push_back(make_check("dim_squares_span", Int(10), Int(sq.dim())));
    rep.checks.push_back(make_check("gap_at_s", Int(1), Int(dv.dim() - sq.dim())));

    auto ec = extra_constraint_basis(six, 2);
    rep.checks.push_back(make_check("extra_constraint_count", Int(1), Int(ec.size())));
    Form r4 = Form::monomial(4, ExponentVector{1, 1, 1, 1}, Rational(1));
    rep.checks.push_back(make_check("extra_constraint_nonzero_on_x1x2x3x4", true,
                                    !ec.empty() && !ec[0].apply(r4).is_zero()));

    auto verdict = check_d_independence(six, 2, {10000, seed});
    rep.checks.push_back(make_check("condition2_holds", true, verdict.condition2_holds));
    rep.checks.push_back(make_check("per_point_codimension", std::string("9,9,9,9,9,9"),
                                    join_sizes(verdict.per_point_codimension)));
    rep.checks.push_back(
        make_check("condition1", std::string("ProvenExact"), to_string(verdict.condition1)));

    SixPointConfig cfg = build_six_point_config(six);
    bool inprod_ok = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            inprod_ok = inprod_ok && !dot(cfg.u[i], cfg.v_dual[j]).is_zero() &&
                        !dot(cfg.v[i], cfg.u_dual[j]).is_zero();
    rep.checks.push_back(make_check("inner_product_lemma", true, inprod_ok));

    bool products_zero = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            auto res = check_extra_constraint_eq7(cfg, multiply(cfg.q_forms[i], cfg.q_forms[j]));
            for (const auto& x : res) products_zero = products_zero && x.is_zero();
        }
    rep.checks.push_back(make_check("eq7_zero_on_pairwise_products", true, products_zero));
    auto res_r = check_extra_constraint_eq7(cfg, cfg.r_form);
    bool r_nonzero = true;
    for (const auto& x : res_r) r_nonzero = r_nonzero && !x.is_zero();
    rep.checks.push_back(make_check("eq7_nonzero_on_r", true, r_nonzero));

    auto cert = sos_fulldim_certificate(six, 2, {10000, seed});
    rep.checks.push_back(make_check("roundness_valid", true, cert.certificate.valid));
    rep.checks.push_back(make_check("pos_face_dim", Int(11), Int(cert.double_vanishing_dim)));
    Check h = make_check("full_dimensional_claim", true, cert.full_dimensional_claim);
    rep.checks.push_back(h);
    return rep;
}

RunReport verify_seven_points(std::uint64_t seed) {
    RunReport rep;
    rep.command = "verify seven-points";
    SevenPointConfig cfg = build_seven_point_config();
    auto v = vanishing_space(cfg.points, 2);
    auto dv = double_vanishing_space(cfg.points, 4);
    auto sq = squares_span(cfg.points, 2);
    rep.checks.push_back(make_check("dim_vanishing", Int(3), Int(v.dim())));
    rep.checks.push_back(make_check("dim_double_vanishing", Int(7), Int(dv.dim())));
    rep.checks.push_back(make_check("dim_squares_span", Int(6), Int(sq.dim())));
    rep.checks.push_back(make_check(
        "ah_expected", Int(7), expected_dimension_ah(4, 4, Int(7))));

    for (int i = 0; i < 4; ++i) {
        std::vector<Rational> ones(4, Rational(1));
        rep.checks.push_back(make_check("q" + std::to_string(i + 1) + "_at_ones", Rational(-2),
                                        evaluate(cfg.q_forms[static_cast<std::size_t>(i)], ones)));
    }

    auto verdict = check_d_independence(cfg.points, 2, {10000, seed});
    rep.checks.push_back(make_check("condition2_holds", false, verdict.condition2_holds));
    // the witness at (1,1,0,0) must be proportional to (x1-x2)^2 - (x3-x4)^2
    Form expected_witness =
        form_from_text(4, 2, "1/1 * x1^2 x2^0 x3^0 x4^0 + -2/1 * x1^1 x2^1 x3^0 x4^0 + "
                             "1/1 * x1^0 x2^2 x3^0 x4^0 + -1/1 * x1^0 x2^0 x3^2 x4^0 + "
                             "2/1 * x1^0 x2^0 x3^1 x4^1 + -1/1 * x1^0 x2^0 x3^0 x4^2");
    bool witness_ok = false;
    for (const auto& [idx, w] : verdict.condition2_witnesses) {
        if (!projectively_equal(cfg.points.point(idx),
                                {Rational(1), Rational(1), Rational(0), Rational(0)}))
            continue;
        FormSubspace span_w(4, 2, {w});
        witness_ok = span_w.contains(expected_witness);
    }
    rep.checks.push_back(make_check("condition2_witness_at_1100", true, witness_ok));

    LineTemplate line{std::nullopt, Rational(1), Rational(1), Rational(1)};
    UnivariatePoly f1_line = restrict_to_line(cfg.f1, line);
    UnivariatePoly f2_line = restrict_to_line(cfg.f2, line);
    UnivariatePoly xm1({Rational(-1), Rational(1)});
    UnivariatePoly expected_f1 = (xm1 * xm1) * (xm1 * xm1);
    expected_f1 = expected_f1.scaled(Rational(3));
    UnivariatePoly expected_f2 =
        (xm1 * xm1) * xm1 * UnivariatePoly({Rational(-9), Rational(1)});
    rep.checks.push_back(
        make_check("f1_on_line", expected_f1.str(), f1_line.str()));
    rep.checks.push_back(
        make_check("f2_on_line", expected_f2.str(), f2_line.str()));

    auto viol = nonneg_violation_on_line(cfg.f1, cfg.f2, line, Rational(1, 1000));
    rep.checks.push_back(make_check("f1_plus_eps_f2_negative", true, viol.value_sign_change));

    rep.checks.push_back(
        make_check("f2_not_in_squares_span", false, squares_span(cfg.points, 2).contains(cfg.f2)));
    auto cert = sos_fulldim_certificate(cfg.points, 2, {10000, seed});
    rep.checks.push_back(make_check("roundness_fails", false, cert.certificate.valid));
    // claim from the source material, not recomputed here: the nonnegative
    // face has dimension 6, one less than the double-vanishing space
    Check note{"pos_face_dim_6", "claim", "claim", true, true};
    rep.checks.push_back(note);
    return rep;
}

RunReport verify_partitions(int n, int d) {
    RunReport rep;
    rep.command = "verify partitions " + std::to_string(n) + " " + std::to_string(d);
    PartitionConfig cfg = build_partition_config(n, d);
    rep.checks.push_back(make_check("points_count", binomial(n + d - 1, d) - n,
                                    Int(static_cast<long>(cfg.points.size()))));
    auto vs = vanishing_space(cfg.points, d);
    rep.checks.push_back(make_check("dim_vanishing", Int(n), Int(vs.dim())));

    Rational dfact(factorial(static_cast<unsigned long>(d)));
    bool diag_ok = true, offdiag_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> ej(static_cast<std::size_t>(n), Rational(0));
            ej[static_cast<std::size_t>(j)] = Rational(1);
            Rational val = evaluate(cfg.qi_basis[static_cast<std::size_t>(i)], ej);
            if (i == j)
                diag_ok = diag_ok && val == dfact;
            else
                offdiag_ok = offdiag_ok && val.is_zero();
        }
    rep.checks.push_back(make_check("qi_at_ei_is_d_factorial", true, diag_ok));
    rep.checks.push_back(make_check("qi_at_ej_zero", true, offdiag_ok));

    rep.checks.push_back(make_check("condition1_enumeration", true, prove_condition1_partition(cfg)));
    bool ranks_ok = true, kernel_ok = true;
    for (const auto& s : cfg.points.points()) {
        ranks_ok = ranks_ok && singular_matrix_rank(cfg, s) == static_cast<std::size_t>(n - 1);
        Matrix ker = kernel_basis(singular_matrix_b(d, s));
        kernel_ok = kernel_ok && ker.cols() == 1;
        if (ker.cols() == 1) {
            auto col = ker.column(0);
            for (const auto& x : col) kernel_ok = kernel_ok && x == col[0];
        }
    }
    rep.checks.push_back(make_check("singular_matrix_rank_n_minus_1", true, ranks_ok));
    rep.checks.push_back(make_check("kernel_of_b_all_ones", true, kernel_ok));

    auto verdict = check_d_independence(cfg.points, d);
    rep.checks.push_back(make_check("condition1", std::string("ProvenExact"),
                                    to_string(verdict.condition1)));
    rep.checks.push_back(make_check("condition2_holds", true, verdict.condition2_holds));
    rep.checks.push_back(make_check("d_independent", true, is_d_independent(verdict)));

    rep.checks.push_back(make_check("dim_squares_span", binomial(n + 1, 2),
                                    Int(squares_span(cfg.points, d).dim())));
    rep.checks.push_back(
        make_check("dim_vanishing_all_partitions", Int(0), Int(vanishing_space(cfg.points_all, d).dim())));

    bool interp_ok = true;
    for (const auto& sp : cfg.points_all.points()) {
        std::vector<int> si;
        for (const auto& x : sp) si.push_back(static_cast<int>(x.numerator().get_si()));
        Form p = interpolant(n, d, si);
        for (const auto& tp : cfg.points_all.points()) {
            Rational val = evaluate(p, tp);
            bool same = projectively_equal(sp, tp);
            interp_ok = interp_ok && (same ? !val.is_zero() : val.is_zero());
        }
    }
    rep.checks.push_back(make_check("interpolants_select_points", true, interp_ok));
    return rep;
}

RunReport verify_s_n2(int n) {
    RunReport rep;
    rep.command = "verify s-n2 " + std::to_string(n);
    PointSet s = build_s_n2(n);
    rep.checks.push_back(make_check("points_count", binomial(n, 2) + n,
                                    Int(static_cast<long>(s.size()))));
    auto dv = double_vanishing_space(s, 4);
    rep.checks.push_back(make_check("dim_double_vanishing", binomial(n, 4), Int(dv.dim())));
    // the double-vanishing space is spanned by the squarefree quartic monomials
    std::vector<Form> squarefree;
    for (const auto& e : monomial_basis(n, 4)) {
        bool sf = true;
        for (int x : e) sf = sf && x <= 1;
        if (sf) squarefree.push_back(Form::monomial(n, e, Rational(1)));
    }
    bool span_ok = squarefree.size() == dv.dim();
    for (const auto& m : squarefree) span_ok = span_ok && dv.contains(m);
    rep.checks.push_back(make_check("squarefree_monomial_basis", true, span_ok));
    rep.checks.push_back(make_check("dim_vanishing", Int(0), Int(vanishing_space(s, 2).dim())));
    rep.checks.push_back(make_check(
        "ah_expected", expected_dimension_ah(n, 4, binomial(n + 1, 2)),
        expected_dimension_ah(n, 4, binomial(n + 1, 2))));
    return rep;
}

RunReport verify_inequality(std::uint64_t seed) {
    RunReport rep;
    rep.command = "verify inequality";
    InequalityConfig cfg = build_inequality_config();
    SphereInnerProduct ip(4, 2);

    rep.checks.push_back(make_check("moment_x1^2", Rational(1, 4),
                                    sphere_moment(ExponentVector{2, 0, 0, 0}, 4)));
    rep.checks.push_back(make_check("moment_x1^4", Rational(1, 8),
                                    sphere_moment(ExponentVector{4, 0, 0, 0}, 4)));
    rep.checks.push_back(make_check("moment_x1^2x2^2", Rational(1, 24),
                                    sphere_moment(ExponentVector{2, 2, 0, 0}, 4)));

    auto es = eigen_structure(cfg);
    rep.checks.push_back(make_check("gram_same_pair", Rational(10), es.gram_same));
    rep.checks.push_back(make_check("gram_share_index", Rational(1), es.gram_share));
    rep.checks.push_back(make_check("gram_disjoint", Rational(-2), es.gram_disjoint));
    rep.checks.push_back(make_check("eigenvalue_big", Rational(12), es.eigenvalue_big));
    rep.checks.push_back(make_check("eigenvalue_small", Rational(6), es.eigenvalue_small));
    rep.checks.push_back(make_check("norm2_pa_minus_pb", Rational(18), es.norm2_pa_minus_pb));
    rep.checks.push_back(make_check("norm2_pa_plus_pb", Rational(22), es.norm2_pa_plus_pb));
    // reference values 12, 10 and alpha 15 disagree with the exact
    // computation (2, 20, 30); reported as failing checks, not adjusted
    rep.checks.push_back(make_check("norm2_projection", Rational(12), es.norm2_projection));
    rep.checks.push_back(make_check("norm2_v7", Rational(10), es.norm2_v7));
    rep.checks.push_back(make_check("minimal_alpha", Rational(15), minimal_alpha(cfg)));

    auto sweep15 = inequality_sweep(Rational(15), 1000, seed, cfg, ip);
    rep.checks.push_back(make_check("sweep_alpha15_negatives", Int(0), Int(sweep15.negatives)));
    auto sweep_min = inequality_sweep(minimal_alpha(cfg), 1000, seed, cfg, ip);
    rep.checks.push_back(
        make_check("sweep_alpha_computed_negatives", Int(0), Int(sweep_min.negatives)));

    auto wit = violation_witness(cfg, Rational(1, 10));
    rep.checks.push_back(make_check("witness_value", Rational(-1, 25600), wit.witness_value));
    rep.checks.push_back(
        make_check("witness_ms_sum", Rational(0), functional_MS_form(cfg, wit.witness)));

    auto v14 = find_violating_quadratic(Rational(14), 50, seed + 1, cfg, ip);
    rep.checks.push_back(make_check("alpha14_violation_found", true, v14.has_value()));
    if (v14)
        rep.checks.push_back(make_check("alpha14_violation_negative", true, v14->second.sign() < 0));
    return rep;
}

int cmd_verify(const std::string& name, int n, int d, std::uint64_t seed) {
    auto t0 = Clock::now();
    RunReport rep;
    if (name == "six-points") {
        rep = verify_six_points(seed);
    } else if (name == "seven-points") {
        rep = verify_seven_points(seed);
    } else if (name == "partitions") {
        if (n < 2 || d < 2) {
            std::cerr << "verify partitions requires N D (both >= 2)\n";
            return 2;
        }
        rep = verify_partitions(n, d);
    } else if (name == "s-n2") {
        if (n < 4) {
            std::cerr << "verify s-n2 requires N >= 4\n";
            return 2;
        }
        rep = verify_s_n2(n);
    } else if (name == "inequality") {
        rep = verify_inequality(seed);
    } else {
        std::cerr << "unknown example: " << name << "\n";
        return 2;
    }
    return finish_report(rep, t0);
}

int cmd_gap(int n, int d, long k, bool with_table, const std::string& csv_path) {
    GapReport r = gap_report(n, d, with_table || !csv_path.empty());
    ordered_json j;
    j["command"] = "gap";
    j.update(gap_report_to_json(r));
    if (k >= 0) j["g_at_k"] = g_function(n, d, Int(k)).get_str();
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        out << "k,g\n";
        for (const auto& [kk, g] : r.g_values) out << kk.get_str() << "," << g.get_str() << "\n";
    }
    if (!with_table) j.erase("g_values");
    emit(j);
    return 0;
}

int cmd_inequality(const Rational& alpha, long draws, std::uint64_t seed, const Rational& epsilon,
                   const std::string& points_file, int degree) {
    InequalityConfig cfg = build_inequality_config();
    SphereInnerProduct ip(4, 2);
    ordered_json j;
    j["command"] = "inequality";
    j["alpha"] = alpha.str();
    j["alpha_min_computed"] = minimal_alpha(cfg).str();
    ordered_json es;
    auto e = eigen_structure(cfg);
    es["eigenvalue_big"] = e.eigenvalue_big.str();
    es["eigenvalue_small"] = e.eigenvalue_small.str();
    es["norm2_pa_minus_pb"] = e.norm2_pa_minus_pb.str();
    es["norm2_pa_plus_pb"] = e.norm2_pa_plus_pb.str();
    es["norm2_projection"] = e.norm2_projection.str();
    es["norm2_v7"] = e.norm2_v7.str();
    j["eigen_structure"] = std::move(es);
    auto sweep = inequality_sweep(alpha, draws, seed, cfg, ip);
    ordered_json sj;
    sj["draws"] = sweep.draws;
    sj["seed"] = sweep.seed;
    sj["min_value"] = sweep.min_value.str();
    sj["negatives"] = sweep.negatives;
    j["sweep"] = std::move(sj);
    auto wit = violation_witness(cfg, epsilon);
    ordered_json wj;
    wj["epsilon"] = wit.epsilon.str();
    wj["witness"] = wit.witness.str();
    wj["value"] = wit.witness_value.str();
    j["violation_witness"] = std::move(wj);
    if (!points_file.empty()) {
        std::ifstream in(points_file);
        if (!in) {
            std::cerr << "cannot open " << points_file << "\n";
            return 2;
        }
        ordered_json pj;
        in >> pj;
        PointSet s = point_set_from_json(pj);
        double est = estimate_alpha_numeric(s, degree, 20, seed);
        ordered_json gj;
        gj["label"] = s.label();
        gj["degree"] = degree;
        gj["alpha_estimate"] = est;
        gj["certified"] = false;
        j["general_config"] = std::move(gj);
    }
    emit(j);
    return 0;
}

int cmd_construct(const std::string& what, int n, int d) {
    ordered_json j;
    j["command"] = "construct " + what;
    if (what == "snd") {
        PartitionConfig cfg = build_partition_config(n, d);
        j["points"] = point_set_to_json(cfg.points);
        j["points_all"] = point_set_to_json(cfg.points_all);
        ordered_json forms = ordered_json::array();
        for (const auto& q : cfg.qi_basis) forms.push_back(q.str());
        j["forms"] = std::move(forms);
    } else if (what == "six-points") {
        SixPointConfig cfg = build_six_point_config(six_point_set());
        j["points"] = point_set_to_json(cfg.points);
        ordered_json forms = ordered_json::array();
        for (const auto& q : cfg.q_forms) forms.push_back(q.str());
        forms.push_back(cfg.r_form.str());
        j["forms"] = std::move(forms);
        ordered_json normals;
        auto vecs = [](const std::vector<std::vector<Rational>>& vs) {
            ordered_json a = ordered_json::array();
            for (const auto& v : vs) {
                ordered_json row = ordered_json::array();
                for (const auto& x : v) row.push_back(x.str());
                a.push_back(std::move(row));
            }
            return a;
        };
        normals["u"] = vecs(cfg.u);
        normals["v"] = vecs(cfg.v);
        normals["u_dual"] = vecs(cfg.u_dual);
        normals["v_dual"] = vecs(cfg.v_dual);
        j["normals"] = std::move(normals);
    } else if (what == "seven-points") {
        SevenPointConfig cfg = build_seven_point_config();
        j["points"] = point_set_to_json(cfg.points);
        ordered_json forms = ordered_json::array();
        for (const auto& r : cfg.r_basis) forms.push_back(r.str());
        forms.push_back(cfg.f1.str());
        forms.push_back(cfg.f2.str());
        j["forms"] = std::move(forms);
    } else if (what == "sn2") {
        j["points"] = point_set_to_json(build_s_n2(n));
    } else {
        std::cerr << "unknown construct target: " << what << "\n";
        return 2;
    }
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimensional analysis of vanishing-point faces of nonnegative and "
                 "sums-of-squares cones"};
    app.require_subcommand(1);

    std::string points_file;
    int degree = 2;
    auto* dims = app.add_subcommand("dims", "dimensions of the three point spaces");
    dims->add_option("--points", points_file, "PointSet JSON file")->required();
    dims->add_option("--degree", degree, "degree d of the vanishing forms")->required();

    std::string verify_name;
    int vn = 0, vd = 0;
    auto* verify = app.add_subcommand("verify", "run the check list for a named configuration");
    verify->add_option("name", verify_name,
                       "six-points | seven-points | partitions N D | s-n2 N | inequality")
        ->required();
    verify->add_option("n", vn, "first parameter (when required)");
    verify->add_option("d", vd, "second parameter (when required)");

    int gn = 0, gd = 0;
    long gk = -1;
    bool table = false;
    std::string csv_path;
    auto* gap = app.add_subcommand("gap", "gap numbers and the G function");
    gap->add_option("n", gn, "number of variables")->required();
    gap->add_option("d", gd, "half-degree")->required();
    gap->add_option("k", gk, "evaluate G at this k");
    gap->add_flag("--table", table, "include the full G(k) table");
    gap->add_option("--csv", csv_path, "write the G(k) table to a CSV file");

    std::string alpha_str = "15", eps_str = "1/10";
    long draws = 1000;
    std::uint64_t seed = default_seed();
    std::string ineq_points;
    int ineq_degree = 2;
    auto* ineq = app.add_subcommand("inequality", "separating inequality computations");
    ineq->add_option("--alpha", alpha_str, "alpha for the sweep (rational)");
    ineq->add_option("--draws", draws, "number of random quadratics");
    ineq->add_option("--seed", seed, "random seed (default: SOSGAP_SEED or 0)");
    ineq->add_option("--epsilon", eps_str, "witness perturbation (rational)");
    ineq->add_option("--points", ineq_points, "PointSet JSON for a non-certified alpha estimate");
    ineq->add_option("--degree", ineq_degree, "degree d for the general estimate");

    std::string cwhat;
    int cn = 4, cd = 2;
    auto* construct = app.add_subcommand("construct", "emit configuration JSON");
    construct->add_option("what", cwhat, "snd N D | six-points | seven-points | sn2 N")
        ->required();
    construct->add_option("n", cn, "first parameter");
    construct->add_option("d", cd, "second parameter");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dims) return cmd_dims(points_file, degree);
        if (*verify) return cmd_verify(verify_name, vn, vd, seed);
        if (*gap) return cmd_gap(gn, gd, gk, table, csv_path);
        if (*ineq)
            return cmd_inequality(Rational::parse(alpha_str), draws, seed,
                                  Rational::parse(eps_str), ineq_points, ineq_degree);
        if (*construct) return cmd_construct(cwhat, cn, cd);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
