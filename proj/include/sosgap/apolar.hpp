#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sosgap/point_ideals.hpp"

namespace sosgap {

/// Exact moment of the monomial x^alpha under the uniform probability
/// measure on the unit sphere S^{n-1}; zero unless every exponent is even.
Rational sphere_moment(const ExponentVector& alpha, int n);

/// The integral inner product <f,g> = avg of fg over the sphere, as an exact
/// Gram matrix over the degree-d monomial basis.
class SphereInnerProduct {
public:
    SphereInnerProduct(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    const Matrix& gram() const { return gram_; }
    const std::vector<ExponentVector>& monomials() const { return monomials_; }

    Rational inner(const Form& f, const Form& g) const;

private:
    int n_;
    int d_;
    std::vector<ExponentVector> monomials_;
    Matrix gram_;
};

/// The unique P_v with <f, P_v> = f(v) for all f of the matching degree.
/// Closed form 12<x,v>^2 - 2|v|^2 |x|^2 for (n,d) = (4,2); Gram solve
/// otherwise. Verified against the reproducing property at build time.
Form reproducing_element(const std::vector<Rational>& v, const SphereInnerProduct& ip);

/// A point stored as an exact vector t with a declared squared norm c; the
/// intended point is t / sqrt(c), so squared quantities stay rational.
struct ScaledPoint {
    std::vector<Rational> coords;
    Rational norm2;
};

/// The explicit six-point inequality configuration: unit-length pair points,
/// the test points a, b, reproducing quadratics, and the exact eigenstructure
/// of the value-sum functional.
struct InequalityConfig {
    std::vector<ScaledPoint> points;  // six pair points, norm2 = 2
    std::vector<Rational> a, b;       // unit vectors
    std::vector<Form> p_ij;           // reproducing elements of the six points
    Form p_a = Form(4, 2);
    Form p_b = Form(4, 2);
    std::vector<Form> eigvec;         // v1..v7
    Rational eigenvalue_big;          // 12, on span{v1..v4}
    Rational eigenvalue_small;        // 6, on span{v5, v6}
    Rational norm2_pa_minus_pb;       // 18
    Rational norm2_pa_plus_pb;        // 22
    Rational norm2_projection;        // |v1/6|^2, computed
    Rational norm2_v7;                // computed
};

/// Builds the configuration and verifies every exact identity (reproducing
/// property, Gram values, eigen relations, orthogonality, projection).
/// Throws on any failure.
InequalityConfig build_inequality_config();

/// M_S(g^2) = sum over points of g(s)^2, handled through the scale factors.
Rational functional_MS(const InequalityConfig& cfg, const Form& g);

/// M_S(p) = sum over points of p(s) for an even-degree form p.
Rational functional_MS_form(const InequalityConfig& cfg, const Form& p);

/// T(g^2) = <g, g>.
Rational functional_T(const Form& g, const SphereInnerProduct& ip);

/// T(p) = integral of p over the sphere (any degree, via moments).
Rational functional_T_form(const Form& p);

/// R_S(g^2) = (g(a)^2 - g(b)^2)^2.
Rational functional_RS(const InequalityConfig& cfg, const Form& g);

/// R_S(p) = (p(a) - p(b))^2 for quartic p.
Rational functional_RS_form(const InequalityConfig& cfg, const Form& p);

/// General-S residual functional: R_S(p) = sum l_i(p)^2 over an
/// extra-constraint basis.
Rational functional_RS_general(const std::vector<LinearFunctional>& ls, const Form& p);

struct EigenStructureReport {
    Rational eigenvalue_big, eigenvalue_small;
    Rational norm2_pa_minus_pb, norm2_pa_plus_pb, norm2_projection, norm2_v7;
    Rational gram_same, gram_share, gram_disjoint;  // 10, 1, -2
};

EigenStructureReport eigen_structure(const InequalityConfig& cfg);

/// Minimal separating constant from the verified structure:
/// |P_a - P_b|^2 |v_7|^2 / eigenvalue_big. Nothing hard-coded.
Rational minimal_alpha(const InequalityConfig& cfg);

/// alpha M_S(g^2) T(g^2) - R_S(g^2), exact.
Rational check_inequality(const Rational& alpha, const Form& g, const InequalityConfig& cfg,
                          const SphereInnerProduct& ip);

struct SeparationResult {
    Rational alpha_min;
    Form witness;            // Q + eps x1 x2 x3 x4
    Rational witness_value;  // alpha M_S T - R_S at the witness: -eps^2/256
    Rational epsilon;
};

/// Nonnegative direction violating the inequality for every alpha: the
/// witness vanishes on S (so the M_S term is zero) but R_S is positive.
SeparationResult violation_witness(const InequalityConfig& cfg,
                                   const Rational& epsilon = Rational(1, 10));

struct SweepResult {
    long draws = 0;
    std::uint64_t seed = 0;
    Rational min_value;
    long negatives = 0;
};

/// check_inequality over seeded random rational quadratics.
SweepResult inequality_sweep(const Rational& alpha, long draws, std::uint64_t seed,
                             const InequalityConfig& cfg, const SphereInnerProduct& ip);

/// Numeric ascent on R_S / (M_S T) followed by exact re-evaluation; returns a
/// quadratic with exact negative check_inequality value at alpha, if found.
std::optional<std::pair<Form, Rational>> find_violating_quadratic(
    const Rational& alpha, long restarts, std::uint64_t seed, const InequalityConfig& cfg,
    const SphereInnerProduct& ip);

/// Non-certified numeric estimate of the minimal alpha for an arbitrary
/// configuration (general residual functional from the extra constraints).
double estimate_alpha_numeric(const PointSet& s, int d, long restarts, std::uint64_t seed);

}  // namespace sosgap
