#include "symdiff/extension.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace symdiff {

namespace {

void require_nm(int n, std::int64_t m) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (m < 0) throw DomainError("m must be >= 0");
}

std::int64_t offset(const TripleIndex& t, int r) {
    const Rational v = Rational(t.i + t.m, 2) + Rational(t.n + 1 - 2 * r, 2) * Rational(t.khat);
    return v.to_int64();
}

} // namespace

DivisorCoeffs divisor_D(int n, std::int64_t m) {
    require_nm(n, m);
    DivisorCoeffs out{n, m, {}};
    for (int r = 1; r <= n; ++r) {
        std::int64_t a = 0;
        for (int j = 0; j <= std::min(r - 1, n - r); ++j) a += ceil_div(m - 2 * j, n + 1);
        out.a.push_back(a);
    }
    return out;
}

DivisorCoeffs divisor_D_bruteforce(int n, std::int64_t m, std::int64_t i_max) {
    require_nm(n, m);
    if (i_max < static_cast<std::int64_t>(n + 1) * m) {
        throw DomainError("scan window i_max=" + std::to_string(i_max) + " is smaller than (n+1)m");
    }
    DivisorCoeffs out{n, m, std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::max())};
    for (std::int64_t i = 0; i <= i_max; ++i) {
        const std::int64_t kmax = (i + m) / (n + 1);
        for (std::int64_t khat = -kmax; khat <= kmax; ++khat) {
            const TripleIndex t{n, khat, i, m};
            if (!satisfies_parity(t)) continue;
            for (int r = 1; r <= n; ++r) out.a[r - 1] = std::min(out.a[r - 1], offset(t, r));
        }
    }
    return out;
}

PoleProfile pole_profile(const TripleIndex& t) {
    require_parity(t);
    PoleProfile p{t, {}};
    for (int r = 1; r <= t.n; ++r) p.offsets.push_back(offset(t, r));
    return p;
}

bool extends_holomorphically(const TripleIndex& t) {
    require_parity(t);
    const std::int64_t a = t.khat < 0 ? -t.khat : t.khat;
    if (t.i < 0 || t.m < 0 || a * (t.n + 1) > t.i + t.m) {
        throw DomainError("block label khat=" + std::to_string(t.khat) + " out of range for i=" +
                          std::to_string(t.i) + ", m=" + std::to_string(t.m));
    }
    const auto profile = pole_profile(t);
    return std::all_of(profile.offsets.begin(), profile.offsets.end(),
                       [&](std::int64_t o) { return o >= t.m; });
}

std::int64_t order_of(std::span<const TripleIndex> blocks) {
    if (blocks.empty()) throw DomainError("order of an empty decomposition");
    std::int64_t best = blocks.front().i;
    for (const auto& t : blocks) best = std::min(best, t.i);
    return best;
}

bool extends_holomorphically(std::span<const TripleIndex> blocks) {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const TripleIndex& t) { return extends_holomorphically(t); });
}

} // namespace symdiff
