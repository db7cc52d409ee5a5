#pragma once

#include <array>
#include <optional>

#include "sosgap/point_ideals.hpp"

namespace sosgap {

using TripleSystem = std::array<std::array<int, 3>, 4>;

/// Partition configuration: points of S_{n,d} (partitions of d with at least
/// two nonzero parts) with the factoring basis Q_i = prod_k (d x_i - k M).
struct PartitionConfig {
    int n = 0;
    int d = 0;
    PointSet points_all;  // all partitions of d
    PointSet points;      // partitions with >= 2 nonzero parts
    std::vector<Form> qi_basis;
};

PartitionConfig build_partition_config(int n, int d);

/// Interpolant p_s: nonzero at the partition point s, zero on the rest of
/// the full partition set.
Form interpolant(int n, int d, const std::vector<int>& s);

/// Exact decision that the Q_i share no common zero outside S_{n,d}: the
/// M(v)=0 branch reduces to the divisibility Q_i - d^d x_i^d in (M), the
/// M(v)=d branch to an integer-vector enumeration.
bool prove_condition1_partition(const PartitionConfig& cfg);

/// Builds A with a_ij = dQ_i/dx_j(s), verifies the row scaling
/// A = diag(P_{s_i}(s)) B^T with B = dI - C, and returns rank(B).
std::size_t singular_matrix_rank(const PartitionConfig& cfg, const std::vector<Rational>& s);

/// The B = dI - C matrix of the singularity analysis (C has constant
/// columns s_j). Its kernel is spanned by the all-ones vector.
Matrix singular_matrix_b(int d, const std::vector<Rational>& s);

/// Six points in R^4 in general linear position, with a covering-triple
/// system, hyperplane normals u_i, v_i, their dual bases, the factoring
/// quadratics Q_i = <x,u_i><x,v_i> and quartic R = prod <x,u_i>.
struct SixPointConfig {
    PointSet points;
    TripleSystem triples;
    TripleSystem cotriples;
    std::vector<std::vector<Rational>> u, v;          // unnormalized normals
    std::vector<std::vector<Rational>> u_dual, v_dual;
    std::vector<Form> q_forms;
    Form r_form;
};

/// Default covering triples {123, 145, 246, 356} (0-based in code).
TripleSystem default_triples();

SixPointConfig build_six_point_config(const PointSet& points,
                                      const std::optional<TripleSystem>& triple_choice = {});

/// Exact decision over all 16 vanishing patterns that the Q_i have no common
/// zero outside the six points.
bool prove_condition1_sixpoints(const SixPointConfig& cfg);

/// Residuals <v*_i,u_i>^2 p(u*_i) - <u*_i,v_i>^2 p(v*_i) for i = 1..4;
/// all zero on the squares span, all nonzero on R.
std::vector<Rational> check_extra_constraint_eq7(const SixPointConfig& cfg, const Form& p);

/// Seven points: the six coordinate-pair points plus (1,1,1,1), with the
/// basis R_i = Q_i - Q_4 of the vanishing quadratics and the symmetric
/// quartics F1 = sum (Q_i - Q_j)^2, F2 = (sum Q_i)^2 - 64 x1 x2 x3 x4.
struct SevenPointConfig {
    PointSet points;
    std::vector<Form> q_forms;  // the six-point factoring quadratics
    std::vector<Form> r_basis;  // R1, R2, R3
    Form f1, f2;
};

SevenPointConfig build_seven_point_config();

/// All partitions of 2 in n parts: the C(n,2) pair points s_ij plus the n
/// points 2 e_i.
PointSet build_s_n2(int n);

/// The six coordinate-pair points of R^4 with the numbering that meshes with
/// the default covering triples: s1 = (0,0,1,1), ..., s6 = (1,1,0,0).
PointSet six_point_set();

/// True iff s is projectively equal, as a set, to S_{n,d}.
bool matches_partition_family(const PointSet& s, int d);

}  // namespace sosgap
