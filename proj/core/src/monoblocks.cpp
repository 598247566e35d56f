#include "symdiff/monoblocks.hpp"

#include <algorithm>
#include <string>

namespace symdiff {

namespace {

std::string describe(const TripleIndex& t) {
    return "(n=" + std::to_string(t.n) + ", khat=" + std::to_string(t.khat) +
           ", i=" + std::to_string(t.i) + ", m=" + std::to_string(t.m) + ")";
}

Rational half(std::int64_t v) { return Rational(v, 2); }

} // namespace

bool satisfies_parity(const TripleIndex& t) {
    const std::int64_t lhs = static_cast<std::int64_t>(t.n + 1) * t.khat;
    return ((lhs - t.i - t.m) % 2) == 0;
}

bool is_admissible(const TripleIndex& t) {
    if (t.n < 1 || t.i < 0 || t.m < 0 || !satisfies_parity(t)) return false;
    const std::int64_t a = t.khat < 0 ? -t.khat : t.khat;
    return a * (t.n + 1) <= t.i + t.m;
}

void require_parity(const TripleIndex& t) {
    if (t.n < 1) {
        throw DomainError("singularity index n must be >= 1, got " + describe(t));
    }
    if (!satisfies_parity(t)) {
        throw DomainError("parity (n+1)*khat == i+m (mod 2) violated by " + describe(t));
    }
}

std::int64_t k_of_khat(const TripleIndex& t) {
    require_parity(t);
    Rational k = half(t.i + t.m) + Rational(t.n + 1, 2) * Rational(t.khat);
    return k.to_int64();
}

std::int64_t khat_of_k(int n, std::int64_t k, std::int64_t i, std::int64_t m) {
    Rational khat(2 * k - i - m, n + 1);
    if (!khat.is_integer()) {
        throw DomainError("block index k=" + std::to_string(k) + " is not invariant for n=" +
                          std::to_string(n));
    }
    return khat.to_int64();
}

ChartExponents chart_exponents(const TripleIndex& t, int r) {
    require_parity(t);
    if (r < -1 || r > t.n + 1) {
        throw DomainError("chart index " + std::to_string(r) + " outside -1..n+1");
    }
    const Rational kh(t.khat);
    Rational i1 = half(t.i - t.m) + Rational(t.n - 1 - 2 * r, 2) * kh;
    Rational i2 = half(t.i + t.m) + Rational(t.n + 1 - 2 * r, 2) * kh;
    return ChartExponents{r, i1.to_int64(), i2.to_int64()};
}

ExponentPair pullback_exponents(std::int64_t i1, std::int64_t i2, std::int64_t m, std::int64_t q,
                                int r, int n) {
    if (q < 0 || q > m) {
        throw DomainError("pullback needs 0 <= q <= m");
    }
    ExponentPair out;
    out.j1 = static_cast<std::int64_t>(n + 1 - r) * i1 + static_cast<std::int64_t>(r - n) * i2 +
             static_cast<std::int64_t>(n - r) * m + static_cast<std::int64_t>(2 * r - 2 * n - 1) * q;
    out.j2 = static_cast<std::int64_t>(-r) * i1 + static_cast<std::int64_t>(r + 1) * i2 +
             static_cast<std::int64_t>(-r) * m + static_cast<std::int64_t>(2 * r + 1) * q;
    return out;
}

std::vector<Rational> pullback_coeffs(std::int64_t m, std::int64_t q, int r, int n) {
    if (m < 0 || q < 0 || q > m) {
        throw DomainError("pullback coefficients need 0 <= q <= m");
    }
    // Each linear factor is stored as (coefficient of X, coefficient of Y).
    const BigInt ax = n + 1 - r, ay = -r;
    const BigInt bx = r - n, by = r + 1;

    std::vector<BigInt> acc{1};
    auto multiply = [&acc](const BigInt& cx, const BigInt& cy) {
        std::vector<BigInt> next(acc.size() + 1, BigInt(0));
        for (std::size_t l = 0; l < acc.size(); ++l) {
            next[l] += acc[l] * cx;
            next[l + 1] += acc[l] * cy;
        }
        acc = std::move(next);
    };
    for (std::int64_t k = 0; k < m - q; ++k) multiply(ax, ay);
    for (std::int64_t k = 0; k < q; ++k) multiply(bx, by);

    std::vector<Rational> out;
    out.reserve(acc.size());
    for (const auto& c : acc) out.emplace_back(c);
    return out;
}

std::int64_t codim_reg(const TripleIndex& t, int r) {
    require_parity(t);
    if (r < -1 || r > t.n) {
        throw DomainError("codimension chart index " + std::to_string(r) + " outside -1..n");
    }
    Rational c = half(t.m - t.i) + Rational(2 * r - t.n + 1, 2) * Rational(t.khat);
    return std::max<std::int64_t>(0, c.to_int64());
}

std::int64_t dim_vreg(const TripleIndex& t) {
    const std::int64_t d = t.m + 1 - codim_reg(t, -1) - codim_reg(t, t.n);
    return std::max<std::int64_t>(0, d);
}

} // namespace symdiff
