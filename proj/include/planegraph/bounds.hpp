#pragma once

// Numeric thresholds for the extraction guarantee and the extremal edge
// bounds. The extraction hypothesis m < (n - (t-1)) / (3t - 7) is always
// decided by integer cross-multiplication; the irrational exponents use
// doubles with the 1e-9 integer snap shared with the generators.

#include <cstdint>
#include <optional>

#include "planegraph/generators.hpp"

namespace planegraph {

/// Exact rational threshold (n - (t-1)) / (3t - 7).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exact test of m < (n - (t-1)) / (3t - 7).
inline bool extraction_hypothesis_holds(int n, int m, int t) {
    require(t >= 4, Errc::BadParameters, "t must be at least 4");
    return static_cast<std::int64_t>(m) * (3 * t - 7) < static_cast<std::int64_t>(n) - (t - 1);
}

struct BoundsProfile {
    int n = 0, t = 0, k = 0;
    Rational extraction_threshold;          // (n - (t-1)) / (3t - 7)
    double ck_upper = 0.0;                  // 3n - 6 - n / (4 k^(log2 3))
    double two_ck_upper = 0.0;              // 3n - 6 - n / (8 k^(log2 3)) + k^3
    std::optional<double> two_ck_lower;     // 3n - 12 - (n-2) / ((2k/7)^(log2 3) - 2)
    double min_circuit_order = 0.0;         // k^(log2 3)
};

inline BoundsProfile bounds_profile(int n, int t, int k) {
    require(t >= 4 && k >= 3 && n >= 1, Errc::BadParameters, "need t >= 4, k >= 3, n >= 1");
    BoundsProfile p;
    p.n = n;
    p.t = t;
    p.k = k;
    p.extraction_threshold = {static_cast<std::int64_t>(n) - (t - 1), 3ll * t - 7};
    double k_pow = pow_snapped(k, log2_3());
    p.min_circuit_order = k_pow;
    p.ck_upper = 3.0 * n - 6.0 - n / (4.0 * k_pow);
    p.two_ck_upper = 3.0 * n - 6.0 - n / (8.0 * k_pow) + static_cast<double>(k) * k * k;
    double denom = pow_snapped(2.0 * k / 7.0, log2_3()) - 2.0;
    if (denom > 0)
        p.two_ck_lower = 3.0 * n - 12.0 - (n - 2) / denom;
    return p;
}

}  // namespace planegraph
