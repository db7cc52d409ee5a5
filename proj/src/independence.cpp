#include "sosgap/certify.hpp"
#include "sosgap/point_ideals.hpp"

namespace sosgap {

namespace {

Rational monomial_value(const ExponentVector& e, const std::vector<Rational>& v) {
    Rational r(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) r *= pow(v[i], static_cast<unsigned long>(e[i]));
    return r;
}

}  // namespace

IndependenceVerdict check_d_independence(const PointSet& s, int d,
                                         const IndependenceOptions& opts) {
    IndependenceVerdict out;
    auto monomials = monomial_basis(s.n(), d);
    std::size_t n = static_cast<std::size_t>(s.n());
    std::size_t target = s.size() + n - 1;
    out.condition2_holds = true;
    for (std::size_t k = 0; k < s.size(); ++k) {
        // constraints: vanish at every point of S, gradient vanishes at point k
        Matrix m(s.size() + n, monomials.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < monomials.size(); ++j)
                m.at(i, j) = monomial_value(monomials[j], s.point(i));
        for (std::size_t var = 0; var < n; ++var)
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                const ExponentVector& e = monomials[j];
                if (e[var] == 0) continue;
                ExponentVector de = e;
                de[var] -= 1;
                m.at(s.size() + var, j) = Rational(e[var]) * monomial_value(de, s.point(k));
            }
        std::size_t codim = rank(m);
        out.per_point_codimension.push_back(codim);
        if (codim != target) {
            out.condition2_holds = false;
            Matrix ker = kernel_basis(m);
            if (ker.cols() > 0) {
                Form::TermMap t;
                for (std::size_t r = 0; r < ker.rows(); ++r)
                    if (!ker.at(r, 0).is_zero()) t[monomials[r]] = ker.at(r, 0);
                out.condition2_witnesses.emplace_back(k, Form::from_terms(s.n(), d, std::move(t)));
            }
        }
    }
    auto c1 = decide_condition1(s, d, opts);
    out.condition1 = c1.verdict;
    out.condition1_witness = c1.witness;
    return out;
}

}  // namespace sosgap
