#include "sosgap/apolar.hpp"

#include <cmath>
#include <stdexcept>

#include "sosgap/random.hpp"

namespace sosgap {

Rational sphere_moment(const ExponentVector& alpha, int n) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("sphere_moment: exponent size mismatch");
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("sphere_moment: negative exponent");
        if (a % 2 != 0) return Rational(0);
        total += a;
    }
    Int num(1);
    for (int a : alpha)
        for (int k = a - 1; k >= 1; k -= 2) num *= k;  // (a-1)!!
    Int den(1);
    for (int j = 1; j <= total / 2; ++j) den *= n + 2 * j - 2;
    return Rational(num, den);
}

SphereInnerProduct::SphereInnerProduct(int n, int d)
    : n_(n), d_(d), monomials_(monomial_basis(n, d)) {
    gram_ = Matrix(monomials_.size(), monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        for (std::size_t j = i; j < monomials_.size(); ++j) {
            ExponentVector sum(monomials_[i].size());
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] = monomials_[i][k] + monomials_[j][k];
            Rational m = sphere_moment(sum, n);
            gram_.at(i, j) = m;
            gram_.at(j, i) = m;
        }
}

Rational SphereInnerProduct::inner(const Form& f, const Form& g) const {
    if (f.n() != n_ || g.n() != n_)
        throw std::invalid_argument("SphereInnerProduct: variable count mismatch");
    if (f.is_zero() || g.is_zero()) return Rational(0);
    if (f.degree() != d_ || g.degree() != d_)
        throw std::invalid_argument("SphereInnerProduct: degree mismatch");
    auto a = f.coefficient_vector(monomials_);
    auto b = g.coefficient_vector(monomials_);
    return dot(a, gram_.apply(b));
}

namespace {

Form norm_squared_form(int n) {
    Form::TermMap t;
    for (int i = 0; i < n; ++i) {
        ExponentVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 2;
        t[e] = Rational(1);
    }
    return Form::from_terms(n, 2, std::move(t));
}

/// P_v for v = t / sqrt(c) in (n=4, d=2): (12/c) <x,t>^2 - 2 (|t|^2/c) |x|^2.
Form reproducing_element_scaled(const std::vector<Rational>& t, const Rational& c) {
    Form lin = Form::linear(t);
    Rational norm2 = dot(t, t);
    return multiply(lin, lin).scaled(Rational(12) / c) -
           norm_squared_form(4).scaled(Rational(2) * norm2 / c);
}

void verify_reproducing(const Form& pv, const std::vector<Rational>& t, const Rational& c,
                        const SphereInnerProduct& ip) {
    // <m, P_v> must equal m(v) = m(t)/c^(d/2); d = 2 here so the scale is 1/c
    for (const auto& m : ip.monomials()) {
        Form mono = Form::monomial(ip.n(), m, Rational(1));
        if (ip.inner(mono, pv) * c != evaluate(mono, t))
            throw std::logic_error("reproducing element fails the reproducing property");
    }
}

}  // namespace

Form reproducing_element(const std::vector<Rational>& v, const SphereInnerProduct& ip) {
    if (static_cast<int>(v.size()) != ip.n())
        throw std::invalid_argument("reproducing_element: dimension mismatch");
    if (ip.n() == 4 && ip.d() == 2) {
        Form pv = reproducing_element_scaled(v, Rational(1));
        verify_reproducing(pv, v, Rational(1), ip);
        return pv;
    }
    // general path: solve gram . coeffs = (v^alpha)_alpha
    std::vector<Rational> rhs(ip.monomials().size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = evaluate(Form::monomial(ip.n(), ip.monomials()[i], Rational(1)), v);
    auto sol = solve(ip.gram(), rhs);
    if (!sol) throw std::logic_error("reproducing_element: singular Gram matrix");
    Form::TermMap t;
    for (std::size_t i = 0; i < sol->size(); ++i)
        if (!(*sol)[i].is_zero()) t[ip.monomials()[i]] = (*sol)[i];
    Form pv = Form::from_terms(ip.n(), ip.d(), std::move(t));
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        Form mono = Form::monomial(ip.n(), ip.monomials()[i], Rational(1));
        if (ip.inner(mono, pv) != rhs[i])
            throw std::logic_error("reproducing element fails the reproducing property");
    }
    return pv;
}

namespace {

/// f(s) for even-degree f at the point s = coords / sqrt(norm2).
Rational value_at_scaled(const Form& f, const ScaledPoint& p) {
    return evaluate(f, p.coords) / pow(p.norm2, static_cast<unsigned long>(f.degree()) / 2);
}

Rational ms_bilinear(const InequalityConfig& cfg, const Form& f, const Form& g) {
    Rational s;
    for (const auto& p : cfg.points) s += value_at_scaled(f, p) * value_at_scaled(g, p);
    return s;
}

}  // namespace

InequalityConfig build_inequality_config() {
    SphereInnerProduct ip(4, 2);
    InequalityConfig cfg;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<Rational> t(4, Rational(0));
            t[static_cast<std::size_t>(i)] = Rational(1);
            t[static_cast<std::size_t>(j)] = Rational(1);
            cfg.points.push_back({t, Rational(2)});
            Form pij = reproducing_element_scaled(t, Rational(2));
            verify_reproducing(pij, t, Rational(2), ip);
            cfg.p_ij.push_back(std::move(pij));
        }
    cfg.a = {Rational(1), Rational(0), Rational(0), Rational(0)};
    cfg.b = {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};
    cfg.p_a = reproducing_element(cfg.a, ip);
    cfg.p_b = reproducing_element(cfg.b, ip);

    // Gram values: 10 on the diagonal, 1 for pairs sharing an index, -2 disjoint
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 6; ++y) {
            int shared = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (!cfg.points[x].coords[k].is_zero() && !cfg.points[y].coords[k].is_zero())
                    ++shared;
            Rational expected = shared == 2 ? Rational(10) : (shared == 1 ? Rational(1) : Rational(-2));
            if (ip.inner(cfg.p_ij[x], cfg.p_ij[y]) != expected)
                throw std::logic_error("build_inequality_config: Gram value mismatch");
        }

    // eigenvectors of the value-sum form on span{P_ij}; index order
    // (12, 13, 14, 23, 24, 34)
    auto comb = [&](std::initializer_list<long> c) {
        Form f(4, 2);
        std::size_t k = 0;
        for (long x : c) f = f + cfg.p_ij[k++].scaled(Rational(x));
        return f;
    };
    Form v1 = comb({1, 1, 1, 1, 1, 1});
    Form v2 = comb({1, 1, 1, -1, -1, -1});
    Form v3 = comb({1, -1, 0, 0, 1, -1});
    Form v4 = comb({1, 1, -2, 2, -1, -1});
    Form v5 = comb({1, 0, -1, -1, 0, 1});
    Form v6 = comb({1, -2, 1, 1, -2, 1});
    Form v7 = cfg.p_a + cfg.p_b - v1.scaled(Rational(1, 6));
    cfg.eigvec = {v1, v2, v3, v4, v5, v6, v7};
    cfg.eigenvalue_big = Rational(12);
    cfg.eigenvalue_small = Rational(6);

    // eigen relations in Gram form: B_M(v_k, m) = lambda <v_k, m> for every
    // monomial m
    for (std::size_t k = 0; k < 6; ++k) {
        Rational lambda = k < 4 ? cfg.eigenvalue_big : cfg.eigenvalue_small;
        for (const auto& e : ip.monomials()) {
            Form m = Form::monomial(4, e, Rational(1));
            if (ms_bilinear(cfg, cfg.eigvec[k], m) != lambda * ip.inner(cfg.eigvec[k], m))
                throw std::logic_error("build_inequality_config: eigen relation fails");
        }
    }
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = x + 1; y < 6; ++y)
            if (!ip.inner(cfg.eigvec[x], cfg.eigvec[y]).is_zero())
                throw std::logic_error("build_inequality_config: eigenvectors not orthogonal");

    // P_a - P_b = v2/2 as forms
    if (!(cfg.p_a - cfg.p_b == v2.scaled(Rational(1, 2))))
        throw std::logic_error("build_inequality_config: P_a - P_b != v2/2");
    // v7 is orthogonal to the span of the P_ij, so v1/6 is the projection
    for (const auto& p : cfg.p_ij)
        if (!ip.inner(v7, p).is_zero())
            throw std::logic_error("build_inequality_config: v7 not orthogonal to span{P_ij}");

    cfg.norm2_pa_minus_pb = ip.inner(cfg.p_a - cfg.p_b, cfg.p_a - cfg.p_b);
    cfg.norm2_pa_plus_pb = ip.inner(cfg.p_a + cfg.p_b, cfg.p_a + cfg.p_b);
    Form proj = v1.scaled(Rational(1, 6));
    cfg.norm2_projection = ip.inner(proj, proj);
    cfg.norm2_v7 = ip.inner(v7, v7);
    if (cfg.norm2_pa_minus_pb != Rational(18) || cfg.norm2_pa_plus_pb != Rational(22))
        throw std::logic_error("build_inequality_config: norm identity fails");
    if (cfg.norm2_v7 != cfg.norm2_pa_plus_pb - cfg.norm2_projection)
        throw std::logic_error("build_inequality_config: Pythagoras fails for v7");
    return cfg;
}

Rational functional_MS(const InequalityConfig& cfg, const Form& g) {
    if (g.n() != 4) throw std::invalid_argument("functional_MS: four variables required");
    Rational s;
    for (const auto& p : cfg.points) {
        Rational val = evaluate(g, p.coords);
        s += val * val / pow(p.norm2, static_cast<unsigned long>(g.degree()));
    }
    return s;
}

Rational functional_MS_form(const InequalityConfig& cfg, const Form& p) {
    if (p.n() != 4) throw std::invalid_argument("functional_MS_form: four variables required");
    if (p.degree() % 2 != 0)
        throw std::invalid_argument("functional_MS_form: even degree required");
    Rational s;
    for (const auto& pt : cfg.points)
        s += evaluate(p, pt.coords) /
             pow(pt.norm2, static_cast<unsigned long>(p.degree()) / 2);
    return s;
}

Rational functional_T(const Form& g, const SphereInnerProduct& ip) { return ip.inner(g, g); }

Rational functional_T_form(const Form& p) {
    Rational s;
    for (const auto& [e, c] : p.terms()) s += c * sphere_moment(e, p.n());
    return s;
}

Rational functional_RS(const InequalityConfig& cfg, const Form& g) {
    Rational ga = evaluate(g, cfg.a), gb = evaluate(g, cfg.b);
    Rational diff = ga * ga - gb * gb;
    return diff * diff;
}

Rational functional_RS_form(const InequalityConfig& cfg, const Form& p) {
    Rational diff = evaluate(p, cfg.a) - evaluate(p, cfg.b);
    return diff * diff;
}

Rational functional_RS_general(const std::vector<LinearFunctional>& ls, const Form& p) {
    Rational s;
    for (const auto& l : ls) {
        Rational v = l.apply(p);
        s += v * v;
    }
    return s;
}

EigenStructureReport eigen_structure(const InequalityConfig& cfg) {
    return EigenStructureReport{cfg.eigenvalue_big,
                                cfg.eigenvalue_small,
                                cfg.norm2_pa_minus_pb,
                                cfg.norm2_pa_plus_pb,
                                cfg.norm2_projection,
                                cfg.norm2_v7,
                                Rational(10),
                                Rational(1),
                                Rational(-2)};
}

Rational minimal_alpha(const InequalityConfig& cfg) {
    return cfg.norm2_pa_minus_pb * cfg.norm2_v7 / cfg.eigenvalue_big;
}

Rational check_inequality(const Rational& alpha, const Form& g, const InequalityConfig& cfg,
                          const SphereInnerProduct& ip) {
    return alpha * functional_MS(cfg, g) * functional_T(g, ip) - functional_RS(cfg, g);
}

SeparationResult violation_witness(const InequalityConfig& cfg, const Rational& epsilon) {
    // Q = sum Q_i^2 over the classical factoring basis; it and the monomial
    // x1 x2 x3 x4 both double vanish on the six points
    Form q_sum(4, 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<Rational> ei(4, Rational(0)), w(4, Rational(-1));
        ei[static_cast<std::size_t>(i)] = Rational(1);
        w[static_cast<std::size_t>(i)] = Rational(1);
        Form qi = multiply(Form::linear(ei), Form::linear(w));
        q_sum = q_sum + multiply(qi, qi);
    }
    Form witness = q_sum + Form::monomial(4, ExponentVector{1, 1, 1, 1}, epsilon);
    Rational ms = functional_MS_form(cfg, witness);
    Rational value = minimal_alpha(cfg) * ms * functional_T_form(witness) -
                     functional_RS_form(cfg, witness);
    return SeparationResult{minimal_alpha(cfg), std::move(witness), value, epsilon};
}

SweepResult inequality_sweep(const Rational& alpha, long draws, std::uint64_t seed,
                             const InequalityConfig& cfg, const SphereInnerProduct& ip) {
    Rng rng(seed);
    SweepResult res{draws, seed, Rational(0), 0};
    bool first = true;
    auto monos = monomial_basis(4, 2);
    for (long i = 0; i < draws; ++i) {
        Form::TermMap t;
        for (const auto& e : monos) {
            Rational c = rng.rational(20, 10);
            if (!c.is_zero()) t[e] = c;
        }
        Form g = Form::from_terms(4, 2, std::move(t));
        Rational v = check_inequality(alpha, g, cfg, ip);
        if (first || v < res.min_value) {
            res.min_value = v;
            first = false;
        }
        if (v.sign() < 0) ++res.negatives;
    }
    return res;
}

namespace {

struct NumericFunctionals {
    std::vector<std::vector<double>> point_rows;  // monomial values at unit points
    std::vector<std::vector<double>> gram;
    std::vector<double> at_a, at_b;

    explicit NumericFunctionals(const InequalityConfig& cfg, const SphereInnerProduct& ip) {
        auto monos = ip.monomials();
        for (const auto& p : cfg.points) {
            std::vector<double> row;
            double scale = 1.0 / p.norm2.to_double();  // degree-2 monomials at t/sqrt(c)
            for (const auto& e : monos)
                row.push_back(evaluate(Form::monomial(4, e, Rational(1)), p.coords).to_double() *
                              scale);
            point_rows.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < monos.size(); ++i) {
            std::vector<double> row;
            for (std::size_t j = 0; j < monos.size(); ++j)
                row.push_back(ip.gram().at(i, j).to_double());
            gram.push_back(std::move(row));
        }
        for (const auto& e : monos) {
            at_a.push_back(evaluate(Form::monomial(4, e, Rational(1)), cfg.a).to_double());
            at_b.push_back(evaluate(Form::monomial(4, e, Rational(1)), cfg.b).to_double());
        }
    }

    double ratio(const std::vector<double>& c) const {
        double ms = 0.0;
        for (const auto& row : point_rows) {
            double v = 0.0;
            for (std::size_t i = 0; i < c.size(); ++i) v += row[i] * c[i];
            ms += v * v;
        }
        double t = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) t += c[i] * gram[i][j] * c[j];
        double ga = 0.0, gb = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            ga += at_a[i] * c[i];
            gb += at_b[i] * c[i];
        }
        double rs = (ga * ga - gb * gb) * (ga * ga - gb * gb);
        double denom = ms * t;
        if (denom < 1e-300) return 0.0;
        return rs / denom;
    }
};

}  // namespace

std::optional<std::pair<Form, Rational>> find_violating_quadratic(
    const Rational& alpha, long restarts, std::uint64_t seed, const InequalityConfig& cfg,
    const SphereInnerProduct& ip) {
    NumericFunctionals nf(cfg, ip);
    Rng rng(seed);
    auto monos = ip.monomials();
    std::size_t dim = monos.size();
    for (long attempt = 0; attempt < restarts; ++attempt) {
        std::vector<double> c(dim);
        for (auto& x : c) x = rng.normal();
        double best = nf.ratio(c);
        double step = 0.5;
        for (int it = 0; it < 400 && step > 1e-9; ++it) {
            std::vector<double> grad(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                double h = 1e-6;
                std::vector<double> cp = c;
                cp[i] += h;
                grad[i] = (nf.ratio(cp) - best) / h;
            }
            double gn = 0.0;
            for (double g : grad) gn += g * g;
            if (gn < 1e-24) break;
            gn = std::sqrt(gn);
            bool moved = false;
            while (step > 1e-9) {
                std::vector<double> cn(dim);
                double norm = 0.0;
                for (std::size_t i = 0; i < dim; ++i) {
                    cn[i] = c[i] + step * grad[i] / gn;
                    norm += cn[i] * cn[i];
                }
                norm = std::sqrt(norm);
                for (auto& x : cn) x /= norm;  // scale invariance of the ratio
                double r = nf.ratio(cn);
                if (r > best) {
                    c = std::move(cn);
                    best = r;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        if (best <= alpha.to_double()) continue;
        // exact re-evaluation of the rationalized candidate
        Form::TermMap t;
        for (std::size_t i = 0; i < dim; ++i) {
            Rational ci = rationalize(c[i], 100000);
            if (!ci.is_zero()) t[monos[i]] = ci;
        }
        Form g = Form::from_terms(4, 2, std::move(t));
        if (g.is_zero()) continue;
        Rational value = check_inequality(alpha, g, cfg, ip);
        if (value.sign() < 0) return std::make_pair(std::move(g), std::move(value));
    }
    return std::nullopt;
}

double estimate_alpha_numeric(const PointSet& s, int d, long restarts, std::uint64_t seed) {
    auto ls = extra_constraint_basis(s, d);
    if (ls.empty()) return 0.0;
    auto monos_d = monomial_basis(s.n(), d);
    auto monos_2d = monomial_basis(s.n(), 2 * d);
    SphereInnerProduct ip(s.n(), d);
    std::size_t dim = monos_d.size();
    // l(g^2) is a quadratic form in the coefficients of g
    std::vector<std::vector<std::vector<double>>> lq;
    for (const auto& l : ls) {
        std::vector<std::vector<double>> q(dim, std::vector<double>(dim, 0.0));
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                ExponentVector e(monos_d[a].size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = monos_d[a][k] + monos_d[b][k];
                for (std::size_t m = 0; m < monos_2d.size(); ++m)
                    if (monos_2d[m] == e) {
                        q[a][b] = l.coeffs[m].to_double();
                        break;
                    }
            }
        lq.push_back(std::move(q));
    }
    std::vector<std::vector<double>> pt_rows;
    for (const auto& p : s.points()) {
        std::vector<double> row;
        for (const auto& e : monos_d)
            row.push_back(evaluate(Form::monomial(s.n(), e, Rational(1)), p).to_double());
        pt_rows.push_back(std::move(row));
    }
    std::vector<std::vector<double>> gram(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) gram[i][j] = ip.gram().at(i, j).to_double();

    auto ratio = [&](const std::vector<double>& c) {
        double rs = 0.0;
        for (const auto& q : lq) {
            double v = 0.0;
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) v += c[a] * q[a][b] * c[b];
            rs += v * v;
        }
        double ms = 0.0;
        for (const auto& row : pt_rows) {
            double v = 0.0;
            for (std::size_t i = 0; i < dim; ++i) v += row[i] * c[i];
            ms += v * v;
        }
        double t = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) t += c[i] * gram[i][j] * c[j];
        double denom = ms * t;
        return denom < 1e-300 ? 0.0 : rs / denom;
    };

    Rng rng(seed);
    double best_overall = 0.0;
    for (long attempt = 0; attempt < restarts; ++attempt) {
        std::vector<double> c(dim);
        for (auto& x : c) x = rng.normal();
        double best = ratio(c);
        double step = 0.5;
        for (int it = 0; it < 300 && step > 1e-9; ++it) {
            std::vector<double> grad(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<double> cp = c;
                cp[i] += 1e-6;
                grad[i] = (ratio(cp) - best) / 1e-6;
            }
            double gn = 0.0;
            for (double g : grad) gn += g * g;
            if (gn < 1e-24) break;
            gn = std::sqrt(gn);
            bool moved = false;
            while (step > 1e-9) {
                std::vector<double> cn(dim);
                double norm = 0.0;
                for (std::size_t i = 0; i < dim; ++i) {
                    cn[i] = c[i] + step * grad[i] / gn;
                    norm += cn[i] * cn[i];
                }
                norm = std::sqrt(norm);
                for (auto& x : cn) x /= norm;
                double r = ratio(cn);
                if (r > best) {
                    c = std::move(cn);
                    best = r;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        best_overall = std::max(best_overall, best);
    }
    return best_overall;
}

}  // namespace sosgap
