#pragma once

#include <cstdint>
#include <vector>

#include "symdiff/exact_rank.hpp"
#include "symdiff/monoblocks.hpp"

namespace symdiff {

/// Point [a : b] of the projective line.
struct ProjectivePoint {
    BigInt a;
    BigInt b;
};

/// Binary forms of degree m vanishing to the given order at a point.
struct VanishingCondition {
    ProjectivePoint point;
    std::int64_t multiplicity = 0;
};

/// Linear conditions on the coefficient vector (c_0..c_m) of sum c_l X^(m-l) Y^l.
/// Row t is the coefficient of s^t in P(a + s*u, b + s*v), so the null space is exactly
/// the forms vanishing to order >= multiplicity at [a : b]. Multiplicities above m+1 are
/// capped (the condition is already everything).
IntMatrix vanishing_rows(const VanishingCondition& cond, std::int64_t m);

/// Pole order that chart r forces on the (khat, i, m) block, obtained by solving the
/// exponent map for the u1-exponent of the chart block mapping onto it.
std::int64_t chart_pole_order(const TripleIndex& t, int r);

/// Point of P^1 where the second pullback factor of chart r vanishes.
ProjectivePoint chart_point(int r, int n);

/// The n+2 conditions (r = -1..n) imposed on the block.
std::vector<VanishingCondition> block_conditions(const TripleIndex& t);

/// dim(W_{-1} and W_n) - dim(all W_r), with every dimension from an exact rank.
std::int64_t hsum_oracle_triple(const TripleIndex& t);

/// Sum of hsum_oracle_triple over admissible triples with 0 <= i <= (n+1)m + n.
std::int64_t hsum_oracle(int n, std::int64_t m);

/// The stacked conditions of the block have rank min(m+1, sum of multiplicities).
bool general_position_check(const TripleIndex& t);

} // namespace symdiff
