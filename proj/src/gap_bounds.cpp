#include "sosgap/gap_bounds.hpp"

#include <stdexcept>

namespace sosgap {

namespace {

void require_positive(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("gap-bounds: n, d >= 1 required");
}

/// The quadratic G as a formula, without the constructible-range guard.
Int g_raw(int n, int d, const Int& k) {
    Int a = binomial(n + 2 * d - 1, 2 * d);
    Int b = binomial(n + d - 1, d);
    return a - k * n - binomial(b - k + 1, Int(2));
}

}  // namespace

Int gap_number(int n, int d) {
    require_positive(n, d);
    return binomial(n + 2 * d - 1, 2 * d) - Int(n) * binomial(n + d - 1, d) +
           binomial(n, 2);
}

Int g_function(int n, int d, const Int& k) {
    require_positive(n, d);
    Int k_max = binomial(n + d - 1, d) - n;
    if (k < 0 || k > k_max)
        throw std::domain_error("g_function: k outside the constructible range");
    return g_raw(n, d, k);
}

KExtremes k_extremes(int n, int d) {
    require_positive(n, d);
    Int k_max = binomial(n + d - 1, d) - n;
    // G is concave with integer maximum at k_max (the real maximizer is
    // k_max + 1/2, value gap_max + 1/8), so G has real roots iff gap_max >= 0
    Int gap = gap_number(n, d);
    KExtremes out{k_max, std::nullopt};
    if (gap < 0) return out;
    // scan for the first k with G(k) >= 0; the least root r1 lies in
    // (k-1, k] and the answer is the smallest integer strictly above r1
    for (Int k(0); k <= k_max + 1; k += 1) {
        Int g = g_raw(n, d, k);
        if (g > 0) {
            out.k_min_positive = k;
            return out;
        }
        if (g == 0) {
            out.k_min_positive = k + 1;
            return out;
        }
    }
    return out;
}

std::optional<Int> k_min_positive_closed_form(int n, int d) {
    require_positive(n, d);
    Int a = binomial(n + 2 * d - 1, 2 * d);
    Int b = binomial(n + d - 1, d);
    // least root r1 = (b - n) + 1/2 - sqrt(disc)/2 with
    // disc = (2n-1)^2 + 8a - 8nb; answer = smallest integer k > r1:
    // k > r1  <=>  2(m - k) + 1 < 0  or  disc > (2(m - k) + 1)^2, m = b - n
    Int disc = (2 * Int(n) - 1) * (2 * Int(n) - 1) + 8 * a - 8 * Int(n) * b;
    if (disc < 0) return std::nullopt;
    Int m = b - n;
    for (Int k(0); k <= m + 1; k += 1) {
        Int t = 2 * (m - k) + 1;
        if (t < 0 || disc > t * t) return k;
    }
    return std::nullopt;
}

GapReport gap_report(int n, int d, bool with_table) {
    require_positive(n, d);
    GapReport r;
    r.n = n;
    r.d = d;
    r.gap_max = gap_number(n, d);
    KExtremes ke = k_extremes(n, d);
    r.k_max = ke.k_max;
    if (r.gap_max > 0) r.k_min_positive = ke.k_min_positive;
    if (with_table) {
        for (Int k(0); k <= ke.k_max; k += 1) r.g_values.emplace_back(k, g_function(n, d, k));
    }
    return r;
}

}  // namespace sosgap
