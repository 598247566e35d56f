#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symdiff/monoblocks.hpp"

namespace symdiff {

/// Coefficients a_1..a_n of the divisor sum a_r E_r on the exceptional chain.
struct DivisorCoeffs {
    int n = 1;
    std::int64_t m = 0;
    std::vector<std::int64_t> a;

    friend bool operator==(const DivisorCoeffs&, const DivisorCoeffs&) = default;
};

/// a_r = sum_{j=0}^{min(r-1, n-r)} ceil((m - 2j)/(n+1)).
DivisorCoeffs divisor_D(int n, std::int64_t m);

/// a_r as the minimum pole offset over admissible triples with i <= i_max.
/// Throws DomainError when i_max < (n+1)m.
DivisorCoeffs divisor_D_bruteforce(int n, std::int64_t m, std::int64_t i_max);

/// Order of the block monomials along each E_r, r = 1..n:
/// (i+m)/2 + ((n+1)/2 - r) khat.
struct PoleProfile {
    TripleIndex triple;
    std::vector<std::int64_t> offsets;
};

PoleProfile pole_profile(const TripleIndex& t);

/// Every offset is at least m, i.e. the block has no pole along any E_r.
/// Requires parity and |khat| <= (i+m)/(n+1).
bool extends_holomorphically(const TripleIndex& t);

/// Smallest vanishing order i among the blocks present in a decomposition.
std::int64_t order_of(std::span<const TripleIndex> blocks);

/// All blocks extend.
bool extends_holomorphically(std::span<const TripleIndex> blocks);

} // namespace symdiff
