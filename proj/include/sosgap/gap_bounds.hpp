#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sosgap/rational.hpp"

namespace sosgap {

/// Largest certified gap: C(n+2d-1,2d) - n C(n+d-1,d) + C(n,2). d is the
/// half-degree throughout this module.
Int gap_number(int n, int d);

/// G_{n,2d}(k) = C(n+2d-1,2d) - kn - C(C(n+d-1,d)-k+1, 2).
/// k must lie in the constructible range [0, C(n+d-1,d)-n].
Int g_function(int n, int d, const Int& k);

struct KExtremes {
    Int k_max;                          // maximizer of G over integers
    std::optional<Int> k_min_positive;  // smallest integer above the least real root
};

/// k_max = C(n+d-1,d) - n. k_min_positive found by exact integer scan of the
/// quadratic (none when G has no real roots); the closed-form root bound is
/// cross-checked against the scan with integer-square comparisons.
KExtremes k_extremes(int n, int d);

/// Closed-form value of k_min_positive via the quadratic formula, decided
/// with exact integer-square comparisons (no floating point).
std::optional<Int> k_min_positive_closed_form(int n, int d);

struct GapReport {
    int n = 0;
    int d = 0;
    Int gap_max;
    Int k_max;
    /// Populated only when gap_max > 0, so that G(k_min_positive) > 0.
    std::optional<Int> k_min_positive;
    std::vector<std::pair<Int, Int>> g_values;  // optional (k, G(k)) table
};

GapReport gap_report(int n, int d, bool with_table = false);

}  // namespace sosgap
