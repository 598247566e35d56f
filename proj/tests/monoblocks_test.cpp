#include <gtest/gtest.h>

#include <symdiff/monoblocks.hpp>

using namespace symdiff;

TEST(Monoblocks, ParityExamples) {
    EXPECT_TRUE(satisfies_parity({1, 0, 0, 2}));
    EXPECT_TRUE(satisfies_parity({2, 1, 1, 2}));
    EXPECT_FALSE(satisfies_parity({1, 0, 1, 2}));
    EXPECT_TRUE(is_admissible({2, 1, 1, 2}));
    EXPECT_FALSE(is_admissible({2, 2, 2, 2}));
    EXPECT_THROW(require_parity({1, 0, 1, 2}), DomainError);
    EXPECT_THROW(require_parity({0, 0, 0, 0}), DomainError);
}

TEST(Monoblocks, BlockIndexMaps) {
    EXPECT_EQ(k_of_khat({1, 0, 0, 2}), 1);
    EXPECT_EQ(k_of_khat({2, 1, 1, 2}), 3);
    EXPECT_EQ(k_of_khat({2, -1, 1, 2}), 0);
    EXPECT_EQ(khat_of_k(2, 3, 1, 2), 1);
    EXPECT_THROW(khat_of_k(2, 2, 1, 2), DomainError);
    for (int n = 1; n <= 6; ++n)
        for (std::int64_t m = 0; m <= 8; ++m)
            for (std::int64_t i = 0; i <= 3 * m + 4; ++i)
                for (std::int64_t kh = -6; kh <= 6; ++kh) {
                    const TripleIndex t{n, kh, i, m};
                    if (!satisfies_parity(t)) continue;
                    EXPECT_EQ(khat_of_k(n, k_of_khat(t), i, m), kh);
                }
}

TEST(Monoblocks, ChartExponentsDifferByMPlusKhat) {
    for (int n = 1; n <= 5; ++n)
        for (std::int64_t m = 0; m <= 6; ++m)
            for (std::int64_t i = 0; i <= 10; ++i)
                for (std::int64_t kh = -4; kh <= 4; ++kh) {
                    const TripleIndex t{n, kh, i, m};
                    if (!satisfies_parity(t)) continue;
                    for (int r = -1; r <= n + 1; ++r) {
                        const auto e = chart_exponents(t, r);
                        EXPECT_EQ(e.i2 - e.i1, m + kh);
                    }
                }
    EXPECT_THROW(chart_exponents({1, 0, 0, 2}, 3), DomainError);
}

TEST(Monoblocks, PullbackExponentExamples) {
    EXPECT_EQ(pullback_exponents(0, 0, 1, 0, 0, 2), (ExponentPair{2, 0}));
    EXPECT_EQ(pullback_exponents(1, 0, 0, 0, 0, 1), (ExponentPair{2, 0}));
    EXPECT_THROW(pullback_exponents(0, 0, 1, 2, 0, 1), DomainError);
}

TEST(Monoblocks, PullbackCoefficientExamples) {
    EXPECT_EQ(pullback_coeffs(2, 0, 0, 1), (std::vector<Rational>{4, 0, 0}));
    EXPECT_EQ(pullback_coeffs(1, 1, 1, 2), (std::vector<Rational>{-1, 2}));
    // n=1, r=0: (2X)(-X + Y)
    EXPECT_EQ(pullback_coeffs(2, 1, 0, 1), (std::vector<Rational>{-2, 2, 0}));
    for (std::int64_t m = 0; m <= 6; ++m)
        for (std::int64_t q = 0; q <= m; ++q) EXPECT_EQ(pullback_coeffs(m, q, 1, 3).size(), static_cast<std::size_t>(m + 1));
}

TEST(Monoblocks, CodimensionExamples) {
    EXPECT_EQ(codim_reg({1, 0, 0, 2}, 0), 1);
    EXPECT_EQ(dim_vreg({1, 0, 0, 2}), 1);
    EXPECT_EQ(codim_reg({1, 0, 0, 2}, -1), 1);
    EXPECT_EQ(codim_reg({2, 0, 4, 2}, 0), 0);
    EXPECT_THROW(codim_reg({1, 0, 0, 2}, 2), DomainError);
    EXPECT_THROW(codim_reg({1, 0, 1, 2}, 0), DomainError);
}

TEST(Monoblocks, CodimensionIsMinusChartExponent) {
    for (int n = 1; n <= 5; ++n)
        for (std::int64_t m = 0; m <= 8; ++m)
            for (std::int64_t i = 0; i <= (n + 1) * m + n; ++i)
                for (std::int64_t kh = -(i + m) / (n + 1); kh * (n + 1) <= i + m; ++kh) {
                    const TripleIndex t{n, kh, i, m};
                    if (!satisfies_parity(t)) continue;
                    for (int r = -1; r <= n; ++r) {
                        const auto e = chart_exponents(t, r);
                        EXPECT_EQ(codim_reg(t, r), std::max<std::int64_t>(0, -e.i1));
                        EXPECT_LE(codim_reg(t, r), m);
                    }
                    EXPECT_GE(dim_vreg(t), 0);
                    EXPECT_LE(dim_vreg(t), m + 1);
                }
}
