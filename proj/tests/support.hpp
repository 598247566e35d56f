#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// library routine it is meant to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <symdiff/exact_rank.hpp>
#include <symdiff/rational.hpp>

namespace symdiff::ref {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rational random_rational(std::int64_t bound = 1000) {
    std::int64_t den = 0;
    while (den == 0) den = uniform(-bound, bound);
    return Rational(uniform(-bound, bound), den);
}

/// Plain Gauss-Jordan over Q.
inline int rational_rank(const IntMatrix& rows) {
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (const auto& v : r) row.emplace_back(v);
        a.push_back(std::move(row));
    }
    if (a.empty()) return 0;
    int rank = 0;
    const std::size_t cols = a.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (static_cast<int>(r) == rank || a[r][c].is_zero()) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Definitional weight: min(sum of alpha_r for r < n, beta), straight from the
/// half-plane data, at any rational point.
inline Rational definitional_weight(int n, std::int64_t m, std::int64_t x1, std::int64_t x2) {
    auto alpha = [&](int r) {
        Rational v = Rational(m - x1 + static_cast<std::int64_t>(2 * r - n + 1) * x2, 2);
        return v.sign() > 0 ? v : Rational(0);
    };
    Rational s;
    for (int r = 0; r < n; ++r) s += alpha(r);
    Rational beta = Rational(m + 1) - alpha(-1) - alpha(n);
    if (beta.sign() < 0) beta = Rational(0);
    return s < beta ? s : beta;
}

/// Weighted lattice sum over a generous bounding box with an explicit polygon test.
inline std::int64_t bounding_box_sum(int n, std::int64_t m) {
    std::int64_t total = 0;
    const std::int64_t h = m + 3;
    const std::int64_t w = static_cast<std::int64_t>(n + 1) * (m + 2);
    for (std::int64_t x2 = -h; x2 <= h; ++x2) {
        for (std::int64_t x1 = -2; x1 <= w; ++x1) {
            const std::int64_t y = x2 < 0 ? -x2 : x2;
            if (((x1 + (n + 1) * x2 - m) % 2 + 2) % 2 != 0) continue;
            const bool inside = x1 >= 0 && x1 - (n - 1) * y <= m && -x1 + (n + 1) * y <= m + 2;
            if (!inside) continue;
            total += definitional_weight(n, m, x1, x2).to_int64();
        }
    }
    return total;
}

/// Group average over the cyclic group of order n+1 in complex floating point.
inline double mu_numeric(int n, std::int64_t m) {
    const double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> total = 0.0;
    for (int j = 1; j <= n; ++j) {
        const std::complex<double> e1 = std::polar(1.0, two_pi * j / (n + 1));
        const std::complex<double> e2 = std::polar(1.0, two_pi * j * n / (n + 1));
        std::complex<double> tr = 0.0;
        for (std::int64_t q = 0; q <= m; ++q) tr += std::pow(e1, static_cast<double>(m - q)) * std::pow(e2, static_cast<double>(q));
        total += tr / ((1.0 - e1) * (1.0 - e2));
    }
    return (total / static_cast<double>(n + 1)).real();
}

/// The two-case divisor coefficients: sum_{j=1}^{r} ceil((m+2-2j)/(n+1)) for
/// r <= floor((n+1)/2), mirrored for larger r.
inline std::vector<std::int64_t> divisor_case_formula(int n, std::int64_t m) {
    std::vector<std::int64_t> out;
    for (int r = 1; r <= n; ++r) {
        const int s = r <= (n + 1) / 2 ? r : n + 1 - r;
        std::int64_t a = 0;
        for (int j = 1; j <= s; ++j) {
            const std::int64_t num = m + 2 - 2 * j;
            a += num >= 0 ? (num + n) / (n + 1) : -((-num) / (n + 1));
        }
        out.push_back(a);
    }
    return out;
}

} // namespace symdiff::ref
