#pragma once

#include <cstdint>
#include <vector>

#include "symdiff/rational.hpp"

namespace symdiff {

/// Index (khat, i, m) of an invariant block of degree-m symmetric differentials on the
/// A_n smoothing: i is the vanishing order at the origin, khat the block label.
struct TripleIndex {
    int n = 1;
    std::int64_t khat = 0;
    std::int64_t i = 0;
    std::int64_t m = 0;

    friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
};

/// (n+1)*khat == i+m (mod 2).
bool satisfies_parity(const TripleIndex& t);

/// Parity, i >= 0, m >= 0 and |khat| <= (i+m)/(n+1): the block has a regular member.
bool is_admissible(const TripleIndex& t);

/// Throws DomainError when the parity constraint fails.
void require_parity(const TripleIndex& t);

/// k = (i+m)/2 + (n+1)/2 * khat.
std::int64_t k_of_khat(const TripleIndex& t);

/// khat = (2k - i - m)/(n+1); throws DomainError when that is not an integer.
std::int64_t khat_of_k(int n, std::int64_t k, std::int64_t i, std::int64_t m);

/// Leading exponents (u1^i1 u2^i2) of the block that chart r pulls back onto the
/// (khat, i, m) block. Charts r = -1 and r = n+1 are the virtual charts at both ends.
struct ChartExponents {
    int r = 0;
    std::int64_t i1 = 0;
    std::int64_t i2 = 0;
};

ChartExponents chart_exponents(const TripleIndex& t, int r);

/// Exponents of z1, z2 (before the l-shift) in the pullback of
/// u1^i1 u2^i2 du1^(m-q) du2^q under chart r.
struct ExponentPair {
    std::int64_t j1 = 0;
    std::int64_t j2 = 0;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

ExponentPair pullback_exponents(std::int64_t i1, std::int64_t i2, std::int64_t m, std::int64_t q,
                                int r, int n);

/// Coefficients c_0..c_m of [(n+1-r)X - rY]^(m-q) [(r-n)X + (r+1)Y]^q in the basis
/// X^(m-l) Y^l. Requires 0 <= q <= m.
std::vector<Rational> pullback_coeffs(std::int64_t m, std::int64_t q, int r, int n);

/// Number of block monomials with a pole along {u1 = 0} in chart r, i.e. the
/// codimension of the u1-regular part: max{0, (m-i)/2 + (2r-n+1)/2 * khat}. r in -1..n.
std::int64_t codim_reg(const TripleIndex& t, int r);

/// Dimension of the regular part of the invariant block:
/// max{0, m+1 - codim_reg(t,-1) - codim_reg(t,n)}.
std::int64_t dim_vreg(const TripleIndex& t);

} // namespace symdiff
