#include "sosgap/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sosgap {

namespace {

Form sum_of_variables(int n) {
    return Form::linear(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

std::vector<Rational> to_rational(const std::vector<int>& v) {
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

/// Partitions of d into n nonnegative ordered parts.
std::vector<std::vector<int>> partitions_of(int n, int d) {
    std::vector<std::vector<int>> out;
    for (const auto& e : monomial_basis(n, d)) out.push_back(e);
    return out;
}

Form qi_form(int n, int d, int i) {
    Form m = sum_of_variables(n);
    std::vector<Rational> ei(static_cast<std::size_t>(n), Rational(0));
    ei[static_cast<std::size_t>(i)] = Rational(d);
    Form dxi = Form::linear(ei);
    Form q = Form::constant(n, Rational(1));
    for (int k = 0; k < d; ++k) q = multiply(q, dxi - m.scaled(Rational(k)));
    return q;
}

}  // namespace

PartitionConfig build_partition_config(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("build_partition_config: n, d >= 2 required");
    std::vector<std::vector<Rational>> all, interior;
    for (const auto& s : partitions_of(n, d)) {
        int nonzero = 0;
        for (int x : s) nonzero += (x != 0);
        all.push_back(to_rational(s));
        if (nonzero >= 2) interior.push_back(to_rational(s));
    }
    PartitionConfig cfg{n,
                        d,
                        PointSet(n, std::move(all), "partition-all"),
                        PointSet(n, std::move(interior), "partition-interior"),
                        {}};
    for (int i = 0; i < n; ++i) cfg.qi_basis.push_back(qi_form(n, d, i));
    // Q_i vanish on S_{n,d} and form a basis of I_{1,d}(S_{n,d})
    for (const auto& q : cfg.qi_basis)
        for (const auto& p : cfg.points.points())
            if (!evaluate(q, p).is_zero())
                throw std::logic_error("build_partition_config: Q_i does not vanish on S");
    FormSubspace qs(n, d, cfg.qi_basis);
    FormSubspace vs = vanishing_space(cfg.points, d);
    if (vs.dim() != static_cast<std::size_t>(n) || !vs.contains_all(qs))
        throw std::logic_error("build_partition_config: Q_i are not a basis of the vanishing space");
    return cfg;
}

Form interpolant(int n, int d, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("interpolant: size mismatch");
    int sum = 0;
    for (int x : s) {
        if (x < 0) throw std::invalid_argument("interpolant: negative part");
        sum += x;
    }
    if (sum != d) throw std::invalid_argument("interpolant: not a partition of d");
    Form m = sum_of_variables(n);
    Form p = Form::constant(n, Rational(1));
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> ei(static_cast<std::size_t>(n), Rational(0));
        ei[static_cast<std::size_t>(i)] = Rational(d);
        Form dxi = Form::linear(ei);
        for (int k = 0; k < s[static_cast<std::size_t>(i)]; ++k)
            p = multiply(p, dxi - m.scaled(Rational(k)));
    }
    return p;
}

bool prove_condition1_partition(const PartitionConfig& cfg) {
    int n = cfg.n, d = cfg.d;
    // branch M(v) = 0: Q_i = d^d x_i^d + M g for some g, so the common zeros
    // with M(v) = 0 force every v_i^d = 0
    Form m = sum_of_variables(n);
    auto deg_d = monomial_basis(n, d);
    auto deg_dm1 = monomial_basis(n, d - 1);
    Matrix mul_by_m(deg_d.size(), deg_dm1.size());
    for (std::size_t j = 0; j < deg_dm1.size(); ++j) {
        Form prod = multiply(m, Form::monomial(n, deg_dm1[j], Rational(1)));
        auto col = prod.coefficient_vector(deg_d);
        for (std::size_t i = 0; i < deg_d.size(); ++i) mul_by_m.at(i, j) = col[i];
    }
    Rational dd = pow(Rational(d), static_cast<unsigned long>(d));
    for (int i = 0; i < n; ++i) {
        ExponentVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = d;
        Form residue = cfg.qi_basis[static_cast<std::size_t>(i)] - Form::monomial(n, e, dd);
        if (!solve(mul_by_m, residue.coefficient_vector(deg_d)).has_value()) return false;
    }
    // branch M(v) = d: Q_i(v) = d^d v_i (v_i - 1) ... (v_i - d + 1), so each
    // v_i is an integer in [0, d-1]; enumerate and compare with S_{n,d}
    std::vector<std::vector<int>> candidates;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining == 0) candidates.push_back(cur);
            return;
        }
        for (int e2 = 0; e2 <= std::min(d - 1, remaining); ++e2) {
            cur[static_cast<std::size_t>(pos)] = e2;
            self(self, pos + 1, remaining - e2);
        }
    };
    rec(rec, 0, d);
    if (candidates.size() != cfg.points.size()) return false;
    for (const auto& c : candidates)
        if (!cfg.points.contains_projectively(to_rational(c))) return false;
    return true;
}

Matrix singular_matrix_b(int d, const std::vector<Rational>& s) {
    std::size_t n = s.size();
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b.at(i, j) = (i == j ? Rational(d) - s[j] : -s[j]);
    return b;
}

std::size_t singular_matrix_rank(const PartitionConfig& cfg, const std::vector<Rational>& s_in) {
    const std::vector<Rational>* match = nullptr;
    for (const auto& p : cfg.points.points())
        if (projectively_equal(p, s_in)) {
            match = &p;
            break;
        }
    if (!match) throw std::invalid_argument("singular_matrix_rank: s not in S_{n,d}");
    const std::vector<Rational>& s = *match;
    std::size_t n = static_cast<std::size_t>(cfg.n);
    int d = cfg.d;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Form& q = cfg.qi_basis[i];
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = evaluate(partial(q, static_cast<int>(j)), s);
    }
    // P_{s_i}(s) = Q_i with the vanishing factor removed, evaluated at s:
    // d^{d-1} prod_{k != s_i} (s_i - k)
    std::vector<Rational> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational c = pow(Rational(d), static_cast<unsigned long>(d - 1));
        long si = s[i].numerator().get_si();  // partition entries are integers
        for (int k = 0; k < d; ++k) {
            if (k == si) continue;
            c *= s[i] - Rational(k);
        }
        if (c.is_zero())
            throw std::logic_error("singular_matrix_rank: vanishing P_{s_i}(s), corrupted config");
        scale[i] = c;
    }
    // a_ij = P_{s_i}(s) (d delta_ij - s_i): rows of A scale to rows of B^T
    Matrix b = singular_matrix_b(d, s);
    Matrix bt = b.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j) != scale[i] * bt.at(i, j))
                throw std::logic_error("singular_matrix_rank: row scaling to B^T failed");
    return rank(b);
}

TripleSystem default_triples() {
    return {{{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
}

namespace {

bool valid_triple_system(const TripleSystem& t) {
    std::array<int, 6> count{};
    for (const auto& tr : t) {
        for (int x : tr)
            if (x < 0 || x > 5) return false;
        if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2]) return false;
        for (int x : tr) ++count[static_cast<std::size_t>(x)];
    }
    for (int c : count)
        if (c != 2) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            int common = 0;
            for (int x : t[i])
                for (int y : t[j]) common += (x == y);
            if (common != 1) return false;
        }
    return true;
}

std::vector<Rational> hyperplane_normal(const PointSet& pts, const std::array<int, 3>& triple) {
    Matrix rows(3, 4);
    for (std::size_t r = 0; r < 3; ++r) {
        const auto& p = pts.point(static_cast<std::size_t>(triple[r]));
        for (std::size_t c = 0; c < 4; ++c) rows.at(r, c) = p[c];
    }
    Matrix k = kernel_basis(rows);
    if (k.cols() != 1)
        throw std::invalid_argument("build_six_point_config: triple does not span a hyperplane");
    return k.column(0);
}

}  // namespace

SixPointConfig build_six_point_config(const PointSet& points,
                                      const std::optional<TripleSystem>& triple_choice) {
    if (points.n() != 4 || points.size() != 6)
        throw std::invalid_argument("build_six_point_config: six points in R^4 required");
    TripleSystem triples = triple_choice.value_or(default_triples());
    if (!valid_triple_system(triples))
        throw std::invalid_argument("build_six_point_config: invalid covering triples");
    TripleSystem cotriples;
    for (std::size_t i = 0; i < 4; ++i) {
        std::array<bool, 6> in{};
        for (int x : triples[i]) in[static_cast<std::size_t>(x)] = true;
        std::size_t k = 0;
        for (int x = 0; x < 6; ++x)
            if (!in[static_cast<std::size_t>(x)]) cotriples[i][k++] = x;
    }
    // general position relative to the covering: every triple and complement
    // spans a hyperplane with the three outside points strictly off it.
    // (The classical coordinate-pair configuration has three dependent
    // 4-subsets, none of the form triple + outside point for the default
    // covering; the all-quadruples condition would wrongly reject it.)
    auto check_triple = [&](const std::array<int, 3>& t) {
        std::array<bool, 6> in{};
        for (int x : t) in[static_cast<std::size_t>(x)] = true;
        for (int j = 0; j < 6; ++j) {
            if (in[static_cast<std::size_t>(j)]) continue;
            Matrix m = Matrix::from_rows({points.point(static_cast<std::size_t>(t[0])),
                                          points.point(static_cast<std::size_t>(t[1])),
                                          points.point(static_cast<std::size_t>(t[2])),
                                          points.point(static_cast<std::size_t>(j))});
            if (determinant(m).is_zero())
                throw std::invalid_argument(
                    "build_six_point_config: points not in general linear position "
                    "(vanishing minor at a covering triple)");
        }
    };
    for (const auto& t : triples) check_triple(t);
    for (const auto& t : cotriples) check_triple(t);
    SixPointConfig cfg{points, triples, cotriples, {}, {}, {}, {}, {}, Form(4, 4)};
    for (std::size_t i = 0; i < 4; ++i) {
        cfg.u.push_back(hyperplane_normal(points, triples[i]));
        cfg.v.push_back(hyperplane_normal(points, cotriples[i]));
    }
    auto dual_basis = [](const std::vector<std::vector<Rational>>& rows) {
        auto inv = inverse(Matrix::from_rows(rows));
        if (!inv) throw std::invalid_argument("build_six_point_config: normals are degenerate");
        std::vector<std::vector<Rational>> cols;
        for (std::size_t j = 0; j < 4; ++j) cols.push_back(inv->column(j));
        return cols;
    };
    cfg.u_dual = dual_basis(cfg.u);
    cfg.v_dual = dual_basis(cfg.v);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (dot(cfg.u[i], cfg.v_dual[j]).is_zero() || dot(cfg.v[i], cfg.u_dual[j]).is_zero())
                throw std::invalid_argument(
                    "build_six_point_config: inner-product lemma fails, non-generic input");
        }
    for (std::size_t i = 0; i < 4; ++i)
        cfg.q_forms.push_back(multiply(Form::linear(cfg.u[i]), Form::linear(cfg.v[i])));
    cfg.r_form = multiply(multiply(Form::linear(cfg.u[0]), Form::linear(cfg.u[1])),
                          multiply(Form::linear(cfg.u[2]), Form::linear(cfg.u[3])));
    for (const auto& q : cfg.q_forms)
        for (const auto& p : points.points())
            if (!evaluate(q, p).is_zero())
                throw std::logic_error("build_six_point_config: Q_i does not vanish on S");
    if (rank(FormSubspace::span(4, 2, cfg.q_forms).coeff_matrix()) != 4)
        throw std::logic_error("build_six_point_config: Q_i not independent");
    return cfg;
}

bool prove_condition1_sixpoints(const SixPointConfig& cfg) {
    // a common zero z has, for each i, <z,u_i> = 0 or <z,v_i> = 0; check all
    // 16 patterns and require every surviving candidate to be one of the points
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < 4; ++i)
            rows.push_back((mask >> i) & 1 ? cfg.v[i] : cfg.u[i]);
        Matrix k = kernel_basis(Matrix::from_rows(rows));
        if (k.cols() == 0) continue;
        if (k.cols() >= 2) return false;  // a projective line of common zeros
        if (!cfg.points.contains_projectively(k.column(0))) return false;
    }
    return true;
}

std::vector<Rational> check_extra_constraint_eq7(const SixPointConfig& cfg, const Form& p) {
    if (p.n() != 4 || p.degree() != 4)
        throw std::invalid_argument("check_extra_constraint_eq7: quartic in four variables required");
    std::vector<Rational> res(4);
    for (std::size_t i = 0; i < 4; ++i) {
        Rational lhs = pow(dot(cfg.v_dual[i], cfg.u[i]), 2) * evaluate(p, cfg.u_dual[i]);
        Rational rhs = pow(dot(cfg.u_dual[i], cfg.v[i]), 2) * evaluate(p, cfg.v_dual[i]);
        res[i] = lhs - rhs;
    }
    return res;
}

PointSet six_point_set() {
    auto mk = [](long a, long b, long c, long d) {
        return std::vector<Rational>{Rational(a), Rational(b), Rational(c), Rational(d)};
    };
    return PointSet(4,
                    {mk(0, 0, 1, 1), mk(0, 1, 0, 1), mk(0, 1, 1, 0), mk(1, 0, 0, 1),
                     mk(1, 0, 1, 0), mk(1, 1, 0, 0)},
                    "six-points");
}

SevenPointConfig build_seven_point_config() {
    PointSet six = six_point_set();
    // the classical factoring basis Q_i = x_i (x_i - sum of the others)
    std::vector<Form> q;
    for (int i = 0; i < 4; ++i) {
        std::vector<Rational> ei(4, Rational(0)), w(4, Rational(-1));
        ei[static_cast<std::size_t>(i)] = Rational(1);
        w[static_cast<std::size_t>(i)] = Rational(1);
        q.push_back(multiply(Form::linear(ei), Form::linear(w)));
    }
    auto pts = six.points();
    pts.push_back(std::vector<Rational>(4, Rational(1)));
    PointSet seven(4, std::move(pts), "seven-points");

    std::vector<Form> r_basis;
    for (int i = 0; i < 3; ++i)
        r_basis.push_back(q[static_cast<std::size_t>(i)] - q[3]);
    FormSubspace vs = vanishing_space(seven, 2);
    FormSubspace rb(4, 2, r_basis);
    if (vs.dim() != 3 || !vs.contains_all(rb))
        throw std::logic_error("build_seven_point_config: R_i are not a basis of I_{1,2}(S')");

    Form f1(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) f1 = f1 + power(q[i] - q[j], 2);
    Form sum_q = q[0] + q[1] + q[2] + q[3];
    ExponentVector ones{1, 1, 1, 1};
    Form f2 = power(sum_q, 2) - Form::monomial(4, ones, Rational(64));

    FormSubspace dv = double_vanishing_space(seven, 4);
    if (!dv.contains(f1) || !dv.contains(f2))
        throw std::logic_error("build_seven_point_config: F_1, F_2 not double vanishing");
    if (squares_span(seven, 2).contains(f2))
        throw std::logic_error("build_seven_point_config: F_2 unexpectedly in the squares span");
    return SevenPointConfig{std::move(seven), std::move(q), std::move(r_basis), std::move(f1),
                            std::move(f2)};
}

PointSet build_s_n2(int n) {
    if (n < 2) throw std::invalid_argument("build_s_n2: n >= 2 required");
    std::vector<std::vector<Rational>> pts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> p(static_cast<std::size_t>(n), Rational(0));
            p[static_cast<std::size_t>(i)] = Rational(1);
            p[static_cast<std::size_t>(j)] = Rational(1);
            pts.push_back(std::move(p));
        }
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> p(static_cast<std::size_t>(n), Rational(0));
        p[static_cast<std::size_t>(i)] = Rational(2);
        pts.push_back(std::move(p));
    }
    return PointSet(n, std::move(pts), "s-n2");
}

bool matches_partition_family(const PointSet& s, int d) {
    if (d < 2 || s.n() < 2) return false;
    Int expected = binomial(s.n() + d - 1, d) - s.n();
    if (Int(static_cast<long>(s.size())) != expected) return false;
    for (const auto& e : monomial_basis(s.n(), d)) {
        int nonzero = 0;
        for (int x : e) nonzero += (x != 0);
        if (nonzero < 2) continue;
        std::vector<Rational> p(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) p[i] = Rational(e[i]);
        if (!s.contains_projectively(p)) return false;
    }
    return true;
}

}  // namespace sosgap
