#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sosgap/form.hpp"

namespace sosgap {

bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Finite list of nonzero rational vectors in n-space, interpreted
/// projectively. Construction rejects zero vectors and projective duplicates.
class PointSet {
public:
    PointSet(int n, std::vector<std::vector<Rational>> points, std::string label = "");

    int n() const { return n_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::vector<Rational>>& points() const { return points_; }
    const std::vector<Rational>& point(std::size_t i) const { return points_[i]; }
    const std::string& label() const { return label_; }

    bool contains_projectively(const std::vector<Rational>& v) const;

private:
    int n_;
    std::vector<std::vector<Rational>> points_;
    std::string label_;
};

/// Basis of a linear subspace of P_{n,d}, with the coefficient matrix cached
/// (rows = basis forms, columns = graded-lex monomials).
class FormSubspace {
public:
    FormSubspace(int n, int degree, std::vector<Form> basis);

    /// Row-reduces a spanning set into an independent basis.
    static FormSubspace span(int n, int degree, const std::vector<Form>& spanning);

    int n() const { return n_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Form>& basis() const { return basis_; }
    const Matrix& coeff_matrix() const { return coeff_; }
    const std::vector<ExponentVector>& monomials() const { return monomials_; }

    /// Exact membership.
    bool contains(const Form& f) const;
    bool contains_all(const FormSubspace& other) const;

private:
    int n_;
    int degree_;
    std::vector<Form> basis_;
    std::vector<ExponentVector> monomials_;
    Matrix coeff_;
};

/// I_{1,d}(S): all degree-d forms vanishing at every point of s.
FormSubspace vanishing_space(const PointSet& s, int d);

/// I_{2,d2}(S): degree-d2 forms whose gradient vanishes at every point of s.
FormSubspace double_vanishing_space(const PointSet& s, int d2);

/// I^[2]_{2d}(S): span of pairwise products q_i q_j of a vanishing-space
/// basis (equals the span of squares by polarization).
FormSubspace squares_span(const PointSet& s, int d);

/// Generic dimension of I_{2,d2} at k double points: max(C(n+d2-1,d2) - n k, 0).
Int expected_dimension_ah(int n, int d2, const Int& k);

/// Linear functional on P_{n,degree}, represented against the monomial basis.
struct LinearFunctional {
    int n;
    int degree;
    std::vector<Rational> coeffs;

    Rational apply(const Form& f) const;
};

/// Basis of functionals vanishing on I^[2]_{2d}(S) but not on I_{2,2d}(S);
/// count = dim I_{2,2d}(S) - dim I^[2]_{2d}(S).
std::vector<LinearFunctional> extra_constraint_basis(const PointSet& s, int d);

enum class Condition1 {
    ProvenExact,
    RefutedWithWitness,
    UnknownHeuristicPassed,
    UnknownHeuristicFailed,
};

std::string to_string(Condition1 c);

struct IndependenceVerdict {
    bool condition2_holds = false;
    std::vector<std::size_t> per_point_codimension;
    Condition1 condition1 = Condition1::UnknownHeuristicFailed;
    /// Exact extra common zero, when condition (1) is refuted.
    std::optional<std::vector<Rational>> condition1_witness;
    /// For each point failing condition (2): a nonzero form vanishing on S
    /// and singular at that point.
    std::vector<std::pair<std::size_t, Form>> condition2_witnesses;
};

struct IndependenceOptions {
    long budget = 10000;
    std::uint64_t seed = 0;
};

/// Decides condition (2) exactly; condition (1) exactly when a built-in
/// family prover applies (partition sets, six general points in R^4),
/// otherwise by the heuristic zero search.
IndependenceVerdict check_d_independence(const PointSet& s, int d,
                                         const IndependenceOptions& opts = {});

inline bool is_d_independent(const IndependenceVerdict& v) {
    return v.condition2_holds && v.condition1 == Condition1::ProvenExact;
}

}  // namespace sosgap
