#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sosgap/rational.hpp"

namespace sosgap {

/// Polynomial in a single variable, rational coefficients by ascending power.
/// Leading coefficient is nonzero unless the polynomial is zero.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);

    static UnivariatePoly monomial(const Rational& c, std::size_t power);

    bool is_zero() const { return c_.empty(); }
    /// Degree, -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& x) const;

    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly scaled(const Rational& c) const;
    UnivariatePoly derivative() const;

    bool operator==(const UnivariatePoly& o) const = default;

    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Remainder of a by b.
UnivariatePoly poly_rem(const UnivariatePoly& a, const UnivariatePoly& b);

/// Monic gcd.
UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);

/// p with repeated roots stripped: p / gcd(p, p').
UnivariatePoly squarefree_part(const UnivariatePoly& p);

/// All real roots: exact rational roots where bisection lands on them, plus
/// open isolating intervals (lo, hi) with exactly one root each. Sorted,
/// pairwise disjoint.
struct RealRoot {
    bool exact;
    Rational value;        // when exact
    Rational lo, hi;       // isolating interval otherwise; p(lo), p(hi) != 0
};
std::vector<RealRoot> isolate_real_roots(const UnivariatePoly& p);

/// A rational x with p(x) < 0, if p attains negative values anywhere on R.
/// Exact and complete (sign analysis between isolated roots).
std::optional<Rational> find_negative_value(const UnivariatePoly& p);

}  // namespace sosgap
