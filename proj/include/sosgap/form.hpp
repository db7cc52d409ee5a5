#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sosgap/matrix.hpp"
#include "sosgap/univariate.hpp"

namespace sosgap {

/// Exponents of one monomial; entries sum to the owning form's degree.
using ExponentVector = std::vector<int>;

/// Graded-lexicographic term order with x1 > x2 > ...: lower total degree
/// first, ties broken by larger leading exponents first.
struct GradedLexBefore {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// All exponent vectors of total degree d in n variables, in graded-lex order.
/// Length C(n+d-1, d).
std::vector<ExponentVector> monomial_basis(int n, int d);

/// Homogeneous polynomial in n variables; sparse exponent-vector -> coefficient
/// map with no zero coefficients stored. Immutable in use: operations return
/// new values. The zero form keeps an explicit degree tag.
class Form {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLexBefore>;

    Form(int n, int degree);
    static Form monomial(int n, const ExponentVector& e, const Rational& c);
    static Form from_terms(int n, int degree, TermMap terms);
    /// Linear form <x, w>, n = w.size().
    static Form linear(const std::vector<Rational>& w);
    static Form constant(int n, const Rational& c);

    int n() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const ExponentVector& e) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Form& o) const;
    Form scaled(const Rational& c) const;
    bool operator==(const Form& o) const;

    /// Coefficients against the given monomial list (usually monomial_basis).
    std::vector<Rational> coefficient_vector(const std::vector<ExponentVector>& monomials) const;

    /// Canonical text: "c1 * x1^a1 ... xn^an + ..." with c as "num/den",
    /// graded-lex term order.
    std::string str() const;

private:
    int n_;
    int degree_;
    TermMap terms_;
};

Rational evaluate(const Form& p, const std::vector<Rational>& v);

/// Partial derivative with respect to variable var (0-based).
Form partial(const Form& p, int var);

std::vector<Rational> gradient_at(const Form& p, const std::vector<Rational>& v);

/// Symmetric n x n matrix of exact second partials at v.
Matrix hessian_at(const Form& p, const std::vector<Rational>& v);

Form multiply(const Form& p, const Form& q);

Form power(const Form& p, int k);

/// One line template slot: a constant, or nullopt for the parameter.
using LineTemplate = std::vector<std::optional<Rational>>;

/// Substitutes the line template (exactly one parameter slot) into p.
UnivariatePoly restrict_to_line(const Form& p, const LineTemplate& line);

/// Average of p over all n! coordinate permutations. Capped at n <= 8.
Form symmetrize(const Form& p);

/// Parses the canonical text form produced by Form::str().
Form form_from_text(int n, int degree, const std::string& text);

}  // namespace sosgap
