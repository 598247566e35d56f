#pragma once

#include <cstdint>
#include <optional>

#include "symdiff/cyclotomic.hpp"
#include "symdiff/rational.hpp"

namespace symdiff {

/// Local Chern numbers of the A_n singularity: c1^2 = 0, c2 = n(n+2)/(n+1), s2 = c1^2 - c2.
struct ChernLocal {
    int n = 1;
    Rational c1sq;
    Rational c2;
    Rational s2;
};

ChernLocal chern_local(int n);

/// s2/6 m^3 - c2/2 m^2 - (c1^2 + 3c2)/12 m + (c1^2 + c2)/12.
Rational chi_orb(int n, std::int64_t m);

/// The group average (1/(n+1)) sum_{g != 1} Tr(S^m g) / det(1 - g) as an element of
/// Q(zeta_{n+1}), before any rationality check.
CycloElement mu_cyclotomic(int n, std::int64_t m);

/// Rational value of mu_cyclotomic; throws ArithmeticFault if it is not rational.
Rational mu(int n, std::int64_t m);

/// mu - chi_orb - hsum.
Rational h1(int n, std::int64_t m);

/// (n^5+19n^4+83n^3+137n^2+80n) / (6(n+1)^2(n+2)^2) - (4/3) sum_{k<=n} 1/k^2.
Rational h1_omega(int n);

struct H1OmegaLimitReport {
    int n_max = 0;
    bool strictly_increasing = false;
    Rational threshold;
    std::optional<int> first_above_threshold;
    Rational value_at_max;
    /// 6 h1_omega(n_max) / n_max
    double growth_ratio = 0.0;
};

H1OmegaLimitReport h1_omega_limit_report(int n_max, const Rational& threshold);

} // namespace symdiff
