#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sosgap/point_ideals.hpp"

namespace sosgap {

/// Per-zero roundness data: Hessian, a basis of the hyperplane s-perp, and
/// the exact Sylvester verdict for positive definiteness on it.
struct PointRoundness {
    Matrix hessian;
    Matrix perp_basis;
    bool positive_definite = false;
};

struct RoundnessCertificate {
    Form form;
    PointSet points;
    std::vector<PointRoundness> per_point;
    bool valid = false;  // all points round and the form vanishes at each
};

/// Exact roundness check of p at every point of s. p must vanish on s.
RoundnessCertificate roundness_certificate(const Form& p, const PointSet& s);

struct Condition1Result {
    Condition1 verdict = Condition1::UnknownHeuristicFailed;
    std::optional<std::vector<Rational>> witness;
    bool heuristic_used = false;
};

/// Condition-(1) decision: exact provers for the built-in families (partition
/// sets, six general points in R^4), heuristic zero search otherwise.
Condition1Result decide_condition1(const PointSet& s, int d, const IndependenceOptions& opts = {});

/// Full-dimensionality evidence for the nonnegative face at s: p = sum q_i^2
/// over a vanishing-space basis, its roundness certificate, and the
/// condition-(1) verdict (exact prover when a built-in family matches).
struct FullDimCertificate {
    RoundnessCertificate certificate;
    Condition1 condition1 = Condition1::UnknownHeuristicFailed;
    std::size_t double_vanishing_dim = 0;
    /// certificate.valid and condition1 proven or heuristically supported
    bool full_dimensional_claim = false;
    std::vector<std::string> assumptions;  // nonempty when the claim rests on heuristics
};

FullDimCertificate sos_fulldim_certificate(const PointSet& s, int d,
                                           const IndependenceOptions& opts = {});

enum class ZeroSearchVerdict { NoExtraZeroFound, ExtraZeroCandidate };

std::string to_string(ZeroSearchVerdict v);

struct ZeroSearchReport {
    long samples = 0;
    std::vector<Rational> best_point;  // rationalized, exact re-evaluation below
    Rational best_value;
    long refinement_steps = 0;
    ZeroSearchVerdict verdict = ZeroSearchVerdict::NoExtraZeroFound;
};

/// Floating-point descent search for zeros of p away from s (projective
/// distance > 1e-3). Deterministic for a fixed seed.
ZeroSearchReport heuristic_zero_search(const Form& p, const PointSet& s, long budget,
                                       std::uint64_t seed);

struct LineViolation {
    bool value_sign_change = false;
    Rational witness_x;
    Rational value;
};

/// Restricts f_base + eps f_dir to the line and looks for a rational point
/// with strictly negative value; exact sign analysis, complete over R.
LineViolation nonneg_violation_on_line(const Form& f_base, const Form& f_dir,
                                       const LineTemplate& line, const Rational& eps);

}  // namespace sosgap
