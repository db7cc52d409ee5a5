#include "sosgap/point_ideals.hpp"

#include <stdexcept>

namespace sosgap {

bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    std::size_t k = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) {
            k = i;
            break;
        }
    }
    if (k == a.size()) return false;  // zero vector is not a projective point
    if (b[k].is_zero()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] * b[k] != b[i] * a[k]) return false;
    return true;
}

PointSet::PointSet(int n, std::vector<std::vector<Rational>> points, std::string label)
    : n_(n), points_(std::move(points)), label_(std::move(label)) {
    if (n_ < 1) throw std::invalid_argument("PointSet: n >= 1 required");
    for (const auto& p : points_) {
        if (static_cast<int>(p.size()) != n_)
            throw std::invalid_argument("PointSet: point dimension mismatch");
        bool all_zero = true;
        for (const auto& x : p) all_zero = all_zero && x.is_zero();
        if (all_zero) throw std::invalid_argument("PointSet: zero vector not allowed");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (projectively_equal(points_[i], points_[j]))
                throw std::invalid_argument("PointSet: projectively duplicate points");
}

bool PointSet::contains_projectively(const std::vector<Rational>& v) const {
    for (const auto& p : points_)
        if (projectively_equal(p, v)) return true;
    return false;
}

FormSubspace::FormSubspace(int n, int degree, std::vector<Form> basis)
    : n_(n), degree_(degree), basis_(std::move(basis)), monomials_(monomial_basis(n, degree)) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(basis_.size());
    for (const auto& f : basis_) {
        if (f.n() != n_ || (!f.is_zero() && f.degree() != degree_))
            throw std::invalid_argument("FormSubspace: basis form shape mismatch");
        rows.push_back(f.coefficient_vector(monomials_));
    }
    coeff_ = Matrix::from_rows(rows);
    if (coeff_.rows() > 0 && rank(coeff_) != basis_.size())
        throw std::invalid_argument("FormSubspace: basis forms are linearly dependent");
}

FormSubspace FormSubspace::span(int n, int degree, const std::vector<Form>& spanning) {
    auto monomials = monomial_basis(n, degree);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(spanning.size());
    for (const auto& f : spanning) rows.push_back(f.coefficient_vector(monomials));
    Matrix m = Matrix::from_rows(rows);
    if (m.rows() == 0) return FormSubspace(n, degree, {});
    auto [r, rk] = rref(m);
    std::vector<Form> basis;
    basis.reserve(rk);
    for (std::size_t i = 0; i < rk; ++i) {
        Form::TermMap t;
        for (std::size_t j = 0; j < monomials.size(); ++j)
            if (!r.at(i, j).is_zero()) t[monomials[j]] = r.at(i, j);
        basis.push_back(Form::from_terms(n, degree, std::move(t)));
    }
    return FormSubspace(n, degree, std::move(basis));
}

bool FormSubspace::contains(const Form& f) const {
    if (f.n() != n_) return false;
    if (f.is_zero()) return true;
    if (f.degree() != degree_ || basis_.empty()) return false;
    auto target = f.coefficient_vector(monomials_);
    return solve(coeff_.transpose(), target).has_value();
}

bool FormSubspace::contains_all(const FormSubspace& other) const {
    for (const auto& f : other.basis())
        if (!contains(f)) return false;
    return true;
}

namespace {

std::vector<Form> kernel_forms(const Matrix& constraints, int n, int degree,
                               const std::vector<ExponentVector>& monomials) {
    Matrix k = constraints.rows() == 0
                   ? Matrix::identity(monomials.size())
                   : kernel_basis(constraints);
    std::vector<Form> basis;
    basis.reserve(k.cols());
    for (std::size_t c = 0; c < k.cols(); ++c) {
        Form::TermMap t;
        for (std::size_t r = 0; r < k.rows(); ++r)
            if (!k.at(r, c).is_zero()) t[monomials[r]] = k.at(r, c);
        basis.push_back(Form::from_terms(n, degree, std::move(t)));
    }
    return basis;
}

Rational monomial_value(const ExponentVector& e, const std::vector<Rational>& v) {
    Rational r(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) r *= pow(v[i], static_cast<unsigned long>(e[i]));
    return r;
}

}  // namespace

FormSubspace vanishing_space(const PointSet& s, int d) {
    auto monomials = monomial_basis(s.n(), d);
    Matrix m(s.size(), monomials.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < monomials.size(); ++j)
            m.at(i, j) = monomial_value(monomials[j], s.point(i));
    return FormSubspace(s.n(), d, kernel_forms(m, s.n(), d, monomials));
}

FormSubspace double_vanishing_space(const PointSet& s, int d2) {
    if (d2 < 2) throw std::invalid_argument("double_vanishing_space: degree >= 2 required");
    auto monomials = monomial_basis(s.n(), d2);
    std::size_t n = static_cast<std::size_t>(s.n());
    Matrix m(s.size() * n, monomials.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t var = 0; var < n; ++var) {
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                const ExponentVector& e = monomials[j];
                if (e[var] == 0) continue;
                ExponentVector de = e;
                de[var] -= 1;
                m.at(i * n + var, j) = Rational(e[var]) * monomial_value(de, s.point(i));
            }
        }
    }
    return FormSubspace(s.n(), d2, kernel_forms(m, s.n(), d2, monomials));
}

FormSubspace squares_span(const PointSet& s, int d) {
    FormSubspace v = vanishing_space(s, d);
    std::vector<Form> products;
    products.reserve(v.dim() * (v.dim() + 1) / 2);
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = i; j < v.dim(); ++j)
            products.push_back(multiply(v.basis()[i], v.basis()[j]));
    return FormSubspace::span(s.n(), 2 * d, products);
}

Int expected_dimension_ah(int n, int d2, const Int& k) {
    Int dim = binomial(Int(n + d2 - 1), Int(d2)) - Int(n) * k;
    return dim > 0 ? dim : Int(0);
}

Rational LinearFunctional::apply(const Form& f) const {
    if (f.n() != n || (!f.is_zero() && f.degree() != degree))
        throw std::invalid_argument("LinearFunctional: form shape mismatch");
    auto monos = monomial_basis(n, degree);
    Rational r;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        r += coeffs[i] * f.coeff(monos[i]);
    }
    return r;
}

std::vector<LinearFunctional> extra_constraint_basis(const PointSet& s, int d) {
    FormSubspace sq = squares_span(s, d);
    FormSubspace dv = double_vanishing_space(s, 2 * d);
    if (dv.dim() == 0) return {};
    // functionals annihilating the squares span
    Matrix ann = sq.dim() == 0 ? Matrix::identity(sq.monomials().size())
                               : kernel_basis(sq.coeff_matrix());
    // keep the directions that act nontrivially on the double-vanishing space:
    // row-reduce their restriction to dv and pull back the independent ones
    Matrix restricted = dv.coeff_matrix() * ann;  // dv.dim() x ann.cols()
    auto [r, rk] = rref(restricted.transpose());  // rows = candidate functionals
    std::vector<std::size_t> pivot_rows;
    // recover which columns of ann give independent restrictions
    {
        Matrix t = restricted.transpose();
        std::size_t have = 0;
        std::vector<std::vector<Rational>> taken;
        for (std::size_t i = 0; i < t.rows() && have < rk; ++i) {
            taken.push_back(t.row(i));
            if (rank(Matrix::from_rows(taken)) == taken.size()) {
                pivot_rows.push_back(i);
                ++have;
            } else {
                taken.pop_back();
            }
        }
    }
    std::vector<LinearFunctional> out;
    out.reserve(pivot_rows.size());
    for (std::size_t idx : pivot_rows)
        out.push_back(LinearFunctional{s.n(), 2 * d, ann.column(idx)});
    return out;
}

std::string to_string(Condition1 c) {
    switch (c) {
        case Condition1::ProvenExact: return "ProvenExact";
        case Condition1::RefutedWithWitness: return "RefutedWithWitness";
        case Condition1::UnknownHeuristicPassed: return "UnknownHeuristicPassed";
        case Condition1::UnknownHeuristicFailed: return "UnknownHeuristicFailed";
    }
    return "?";
}

}  // namespace sosgap
