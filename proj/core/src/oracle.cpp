#include "symdiff/oracle.hpp"

#include <algorithm>
#include <string>

namespace symdiff {

namespace {

IntMatrix stack(const std::vector<VanishingCondition>& conds, std::int64_t m) {
    IntMatrix rows;
    for (const auto& c : conds) {
        auto part = vanishing_rows(c, m);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    return rows;
}

std::int64_t dimension(const std::vector<VanishingCondition>& conds, std::int64_t m) {
    return (m + 1) - exact_rank(stack(conds, m));
}

} // namespace

IntMatrix vanishing_rows(const VanishingCondition& cond, std::int64_t m) {
    if (m < 0) throw DomainError("degree must be >= 0");
    if (cond.multiplicity < 0) throw DomainError("multiplicity must be >= 0");
    if (cond.point.a == 0 && cond.point.b == 0) throw DomainError("[0 : 0] is not a point");

    const std::int64_t mult = std::min(cond.multiplicity, m + 1);
    const BigInt& a = cond.point.a;
    const BigInt& b = cond.point.b;
    // Any direction transverse to the point works.
    const BigInt u = (b != 0) ? 1 : 0;
    const BigInt v = (b != 0) ? 0 : 1;

    IntMatrix rows(mult, std::vector<BigInt>(m + 1, BigInt(0)));
    for (std::int64_t l = 0; l <= m; ++l) {
        // (a + s u)^(m-l) (b + s v)^l expanded in s, truncated at degree mult-1.
        std::vector<BigInt> poly{1};
        auto multiply = [&](const BigInt& c0, const BigInt& c1) {
            std::vector<BigInt> next(std::min<std::size_t>(poly.size() + 1, mult), BigInt(0));
            for (std::size_t d = 0; d < poly.size(); ++d) {
                if (d < next.size()) next[d] += poly[d] * c0;
                if (d + 1 < next.size()) next[d + 1] += poly[d] * c1;
            }
            poly = std::move(next);
        };
        for (std::int64_t e = 0; e < m - l; ++e) multiply(a, u);
        for (std::int64_t e = 0; e < l; ++e) multiply(b, v);
        for (std::size_t t = 0; t < poly.size() && t < static_cast<std::size_t>(mult); ++t) {
            rows[t][l] = poly[t];
        }
    }
    return rows;
}

std::int64_t chart_pole_order(const TripleIndex& t, int r) {
    require_parity(t);
    if (r < -1 || r > t.n) {
        throw DomainError("chart index " + std::to_string(r) + " outside -1..n");
    }
    const std::int64_t n = t.n;
    const std::int64_t k = k_of_khat(t);
    const std::int64_t target1 = t.i - k;
    const std::int64_t target2 = k;

    // (n+1-r) i1 + (r-n) i2 = target1 - (n-r) m
    //     -r  i1 + (r+1) i2 = target2 + r m
    const std::int64_t rhs1 = target1 - (n - r) * t.m;
    const std::int64_t rhs2 = target2 + static_cast<std::int64_t>(r) * t.m;
    const std::int64_t det = (n + 1 - r) * (r + 1) + static_cast<std::int64_t>(r) * (r - n);
    const std::int64_t num1 = rhs1 * (r + 1) - (r - n) * rhs2;
    const std::int64_t num2 = (n + 1 - r) * rhs2 + static_cast<std::int64_t>(r) * rhs1;
    if (det == 0 || num1 % det != 0 || num2 % det != 0) {
        throw ArithmeticFault("chart exponent system has no integral solution");
    }
    const std::int64_t i1 = num1 / det;
    const std::int64_t i2 = num2 / det;

    const ExponentPair back = pullback_exponents(i1, i2, t.m, 0, r, t.n);
    if (back.j1 != target1 || back.j2 != target2) {
        throw ArithmeticFault("chart exponent solution does not map back onto the block");
    }
    return std::max<std::int64_t>(0, -i1);
}

ProjectivePoint chart_point(int r, int n) {
    // Coefficients (X, Y) of the second pullback factor; its root is [Y : -X].
    const auto factor = pullback_coeffs(1, 1, r, n);
    return ProjectivePoint{BigInt(factor[1].num()), BigInt(-factor[0].num())};
}

std::vector<VanishingCondition> block_conditions(const TripleIndex& t) {
    std::vector<VanishingCondition> out;
    out.reserve(t.n + 2);
    for (int r = -1; r <= t.n; ++r) {
        out.push_back(VanishingCondition{chart_point(r, t.n), chart_pole_order(t, r)});
    }
    return out;
}

std::int64_t hsum_oracle_triple(const TripleIndex& t) {
    if (t.m < 0) throw DomainError("m must be >= 0");
    const auto all = block_conditions(t);
    const std::vector<VanishingCondition> ends{all.front(), all.back()};
    return dimension(ends, t.m) - dimension(all, t.m);
}

std::int64_t hsum_oracle(int n, std::int64_t m) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (m < 0) throw DomainError("m must be >= 0");
    const std::int64_t i_max = static_cast<std::int64_t>(n + 1) * m + n;
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= i_max; ++i) {
        const std::int64_t kmax = (i + m) / (n + 1);
        for (std::int64_t khat = -kmax; khat <= kmax; ++khat) {
            TripleIndex t{n, khat, i, m};
            if (!satisfies_parity(t)) continue;
            total += hsum_oracle_triple(t);
        }
    }
    return total;
}

bool general_position_check(const TripleIndex& t) {
    const auto all = block_conditions(t);
    std::int64_t total = 0;
    for (const auto& c : all) total += c.multiplicity;
    const std::int64_t expected = std::min(t.m + 1, total);
    return exact_rank(stack(all, t.m)) == expected;
}

} // namespace symdiff
