#include "sosgap/certify.hpp"

#include <cmath>
#include <stdexcept>

#include "sosgap/constructions.hpp"
#include "sosgap/random.hpp"

namespace sosgap {

RoundnessCertificate roundness_certificate(const Form& p, const PointSet& s) {
    if (p.n() != s.n()) throw std::invalid_argument("roundness_certificate: dimension mismatch");
    RoundnessCertificate cert{p, s, {}, true};
    for (const auto& pt : s.points()) {
        if (!evaluate(p, pt).is_zero())
            throw std::invalid_argument("roundness_certificate: form does not vanish on the set");
        Matrix h = hessian_at(p, pt);
        Matrix perp = kernel_basis(Matrix::from_rows({pt}));
        bool pd = is_positive_definite_on_subspace(h, perp);
        cert.valid = cert.valid && pd;
        cert.per_point.push_back({std::move(h), std::move(perp), pd});
    }
    return cert;
}

Condition1Result decide_condition1(const PointSet& s, int d, const IndependenceOptions& opts) {
    if (matches_partition_family(s, d)) {
        PartitionConfig cfg = build_partition_config(s.n(), d);
        if (prove_condition1_partition(cfg)) return {Condition1::ProvenExact, std::nullopt, false};
    }
    if (s.n() == 4 && d == 2 && s.size() == 6) {
        try {
            SixPointConfig cfg = build_six_point_config(s);
            if (prove_condition1_sixpoints(cfg))
                return {Condition1::ProvenExact, std::nullopt, false};
        } catch (const std::invalid_argument&) {
            // not in general position; fall through to the heuristic
        }
    }
    FormSubspace vs = vanishing_space(s, d);
    if (vs.dim() == 0) {
        // the common-zero set of I_{1,d}(S) = {0} is all of projective space
        if (s.n() == 1) return {Condition1::ProvenExact, std::nullopt, false};
        std::vector<std::vector<Rational>> candidates;
        for (int i = 0; i < s.n(); ++i) {
            std::vector<Rational> e(static_cast<std::size_t>(s.n()), Rational(0));
            e[static_cast<std::size_t>(i)] = Rational(1);
            candidates.push_back(std::move(e));
        }
        for (std::size_t k = 1; k <= s.size() + 1; ++k) {
            std::vector<Rational> e(static_cast<std::size_t>(s.n()), Rational(0));
            e[0] = Rational(1);
            e[1] = Rational(static_cast<long>(k));
            candidates.push_back(std::move(e));
        }
        for (const auto& c : candidates)
            if (!s.contains_projectively(c)) return {Condition1::RefutedWithWitness, c, false};
        return {Condition1::ProvenExact, std::nullopt, false};
    }
    Form p(s.n(), 2 * d);
    for (const auto& q : vs.basis()) p = p + multiply(q, q);
    ZeroSearchReport rep = heuristic_zero_search(p, s, opts.budget, opts.seed);
    if (rep.verdict == ZeroSearchVerdict::NoExtraZeroFound)
        return {Condition1::UnknownHeuristicPassed, std::nullopt, true};
    // try to promote the candidate to an exact refutation
    bool exact_zero = true;
    for (const auto& q : vs.basis())
        exact_zero = exact_zero && evaluate(q, rep.best_point).is_zero();
    bool nonzero_vec = false;
    for (const auto& x : rep.best_point) nonzero_vec = nonzero_vec || !x.is_zero();
    if (exact_zero && nonzero_vec && !s.contains_projectively(rep.best_point))
        return {Condition1::RefutedWithWitness, rep.best_point, true};
    return {Condition1::UnknownHeuristicFailed, rep.best_point, true};
}

FullDimCertificate sos_fulldim_certificate(const PointSet& s, int d,
                                           const IndependenceOptions& opts) {
    FormSubspace vs = vanishing_space(s, d);
    Form p(s.n(), 2 * d);
    for (const auto& q : vs.basis()) p = p + multiply(q, q);
    FullDimCertificate out{roundness_certificate(p, s), Condition1::UnknownHeuristicFailed, 0,
                           false, {}};
    auto c1 = decide_condition1(s, d, opts);
    out.condition1 = c1.verdict;
    out.double_vanishing_dim = double_vanishing_space(s, 2 * d).dim();
    bool c1_ok = c1.verdict == Condition1::ProvenExact ||
                 c1.verdict == Condition1::UnknownHeuristicPassed;
    out.full_dimensional_claim = out.certificate.valid && c1_ok;
    if (out.full_dimensional_claim && c1.verdict == Condition1::UnknownHeuristicPassed) {
        out.assumptions.push_back(
            "zero set of the certificate form equals S: supported only by seeded "
            "sphere sampling, not proven");
    }
    return out;
}

std::string to_string(ZeroSearchVerdict v) {
    return v == ZeroSearchVerdict::NoExtraZeroFound ? "NoExtraZeroFound" : "ExtraZeroCandidate";
}

namespace {

/// Flat double-precision copy of a form for fast repeated evaluation.
struct CompiledForm {
    int n;
    std::vector<std::vector<int>> exps;
    std::vector<double> coeffs;

    explicit CompiledForm(const Form& f) : n(f.n()) {
        for (const auto& [e, c] : f.terms()) {
            exps.push_back(e);
            coeffs.push_back(c.to_double());
        }
    }

    double eval(const std::vector<double>& v) const {
        double s = 0.0;
        for (std::size_t t = 0; t < exps.size(); ++t) {
            double m = coeffs[t];
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < exps[t][static_cast<std::size_t>(i)]; ++k)
                    m *= v[static_cast<std::size_t>(i)];
            s += m;
        }
        return s;
    }
};

double projective_distance(const std::vector<double>& x, const std::vector<double>& yraw) {
    double nx = 0.0, ny = 0.0;
    for (double t : x) nx += t * t;
    for (double t : yraw) ny += t * t;
    nx = std::sqrt(nx);
    ny = std::sqrt(ny);
    double dplus = 0.0, dminus = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double a = x[i] / nx, b = yraw[i] / ny;
        dplus += (a - b) * (a - b);
        dminus += (a + b) * (a + b);
    }
    return std::sqrt(std::min(dplus, dminus));
}

}  // namespace

ZeroSearchReport heuristic_zero_search(const Form& p, const PointSet& s, long budget,
                                       std::uint64_t seed) {
    if (p.n() != s.n()) throw std::invalid_argument("heuristic_zero_search: dimension mismatch");
    int n = p.n();
    CompiledForm f(p);
    std::vector<CompiledForm> grad;
    for (int i = 0; i < n; ++i) grad.emplace_back(partial(p, i));
    std::vector<std::vector<double>> set_pts;
    for (const auto& pt : s.points()) {
        std::vector<double> v(pt.size());
        for (std::size_t i = 0; i < pt.size(); ++i) v[i] = pt[i].to_double();
        set_pts.push_back(std::move(v));
    }

    Rng rng(seed);
    ZeroSearchReport rep;
    rep.samples = budget;
    double best_val = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    long steps = 0;
    for (long iter = 0; iter < budget; ++iter) {
        std::vector<double> x = rng.sphere_direction(n);
        double fx = f.eval(x);
        double step = 0.1;
        for (int it = 0; it < 60; ++it) {
            ++steps;
            std::vector<double> g(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = grad[static_cast<std::size_t>(i)].eval(x);
            // project the gradient onto the tangent space of the sphere
            double gx = 0.0;
            for (int i = 0; i < n; ++i) gx += g[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            double gn = 0.0;
            for (int i = 0; i < n; ++i) {
                g[static_cast<std::size_t>(i)] -= gx * x[static_cast<std::size_t>(i)];
                gn += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
            }
            if (gn < 1e-24) break;
            gn = std::sqrt(gn);
            bool moved = false;
            while (step > 1e-12) {
                std::vector<double> y(static_cast<std::size_t>(n));
                double ny = 0.0;
                for (int i = 0; i < n; ++i) {
                    y[static_cast<std::size_t>(i)] =
                        x[static_cast<std::size_t>(i)] - step * g[static_cast<std::size_t>(i)] / gn;
                    ny += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
                }
                ny = std::sqrt(ny);
                for (auto& t : y) t /= ny;
                double fy = f.eval(y);
                if (fy < fx) {
                    x = std::move(y);
                    fx = fy;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        if (fx < best_val) {
            // ignore minima that merely rediscover points of S
            double dmin = std::numeric_limits<double>::infinity();
            for (const auto& sp : set_pts) dmin = std::min(dmin, projective_distance(x, sp));
            if (dmin > 1e-3) {
                best_val = fx;
                best_x = x;
            }
        }
    }
    rep.refinement_steps = steps;
    if (best_x.empty()) {
        rep.verdict = ZeroSearchVerdict::NoExtraZeroFound;
        rep.best_value = Rational(0);
        return rep;
    }
    rep.best_point.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rep.best_point[static_cast<std::size_t>(i)] =
            rationalize(best_x[static_cast<std::size_t>(i)], 1u << 20);
    rep.best_value = evaluate(p, rep.best_point);
    rep.verdict = best_val < 1e-12 ? ZeroSearchVerdict::ExtraZeroCandidate
                                   : ZeroSearchVerdict::NoExtraZeroFound;
    return rep;
}

LineViolation nonneg_violation_on_line(const Form& f_base, const Form& f_dir,
                                       const LineTemplate& line, const Rational& eps) {
    UnivariatePoly g = restrict_to_line(f_base, line);
    if (!f_dir.is_zero()) g = g + restrict_to_line(f_dir, line).scaled(eps);
    auto x = find_negative_value(g);
    if (!x) return {false, Rational(0), Rational(0)};
    return {true, *x, g.evaluate(*x)};
}

}  // namespace sosgap
