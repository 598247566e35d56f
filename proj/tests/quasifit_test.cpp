#include <gtest/gtest.h>

#include <symdiff/asymptotics.hpp>
#include <symdiff/latticesum.hpp>
#include <symdiff/quasifit.hpp>

#include "support.hpp"

using namespace symdiff;

namespace {

std::vector<Sample> hsum_samples(int n, std::int64_t m_max) {
    std::vector<Sample> out;
    for (std::int64_t m = 0; m <= m_max; ++m) out.push_back({m, Rational(hsum(n, m))});
    return out;
}

std::vector<std::vector<Rational>> a2_branches() {
    const Rational c3(29, 216), c2(29, 72);
    return {{Rational(0), Rational(1, 12), c2, c3},       {Rational(-143, 216), Rational(1, 8), c2, c3},
            {Rational(-2, 27), Rational(7, 36), c2, c3},  {Rational(3, 8), Rational(1, 8), c2, c3},
            {Rational(-10, 27), Rational(1, 12), c2, c3}, {Rational(-7, 216), Rational(17, 72), c2, c3}};
}

} // namespace

TEST(Interpolate, RecoversPolynomials) {
    for (int trial = 0; trial < 50; ++trial) {
        const int d = static_cast<int>(ref::uniform(0, 5));
        std::vector<Rational> coeffs;
        for (int k = 0; k <= d; ++k) coeffs.push_back(ref::random_rational(50));
        std::vector<Sample> pts;
        for (int k = 0; k <= d; ++k) {
            const std::int64_t x = 3 * k + ref::uniform(0, 2);
            Rational v;
            for (int e = d; e >= 0; --e) v = v * Rational(x) + coeffs[e];
            pts.push_back({x, v});
        }
        EXPECT_EQ(interpolate(pts), coeffs);
    }
    EXPECT_THROW(interpolate({}), DomainError);
    EXPECT_THROW(interpolate({{1, Rational(1)}, {1, Rational(2)}}), DomainError);
}

TEST(Fit, ConstantSequence) {
    std::vector<Sample> s;
    for (std::int64_t m = 0; m < 10; ++m) s.push_back({m, Rational(5)});
    const auto r = fit({s, 3, 2});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.poly->period(), 1);
    EXPECT_EQ(r.poly->branch(0), (std::vector<Rational>{5, 0, 0, 0}));
    for (const auto& row : coefficient_report(*r.poly)) EXPECT_TRUE(row.branch_independent);
}

TEST(Fit, ReproducesA2QuasiPolynomial) {
    const auto r = fit({hsum_samples(2, 47), 3, 12});
    ASSERT_TRUE(r.ok()) << r.message;
    EXPECT_EQ(r.poly->period(), 6);
    EXPECT_EQ(r.poly->branches(), a2_branches());
    const auto report = coefficient_report(*r.poly);
    EXPECT_EQ(report[3].values, (std::vector<Rational>{Rational(29, 216)}));
    EXPECT_EQ(report[2].values, (std::vector<Rational>{Rational(29, 72)}));
    EXPECT_TRUE(report[3].branch_independent);
    EXPECT_FALSE(report[1].branch_independent);
    EXPECT_EQ(report[1].values.size(), 4u);
}

TEST(Fit, A1HasPeriodSix) {
    const auto r = fit({hsum_samples(1, 60), 3, 12});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.poly->period(), 6);
    const auto report = coefficient_report(*r.poly);
    EXPECT_EQ(report[3].values, (std::vector<Rational>{Rational(11, 108)}));
    EXPECT_EQ(report[2].values, (std::vector<Rational>{Rational(11, 36)}));
}

struct DetectedPeriod {
    int n;
    std::int64_t m_max;
    int period;
};

const std::vector<DetectedPeriod> detected{{1, 80, 6}, {2, 80, 6}, {3, 420, 60}, {4, 240, 30}};

TEST(Fit, DetectedPeriods) {
    for (const auto& d : detected) {
        const auto r = fit({hsum_samples(d.n, d.m_max), 3, 60});
        ASSERT_TRUE(r.ok()) << d.n << ": " << r.message;
        EXPECT_EQ(r.poly->period(), d.period) << d.n;
    }
}

TEST(Fit, CubicAndQuadraticAreH0Omega) {
    for (const auto& d : detected) {
        const int n = d.n;
        const auto r = fit({hsum_samples(n, d.m_max), 3, d.period});
        ASSERT_TRUE(r.ok()) << n << ": " << r.message;
        for (const auto& b : r.poly->branches()) {
            EXPECT_EQ(b[3], h0_omega(n));
            EXPECT_EQ(b[2], Rational(3) * h0_omega(n));
        }
    }
}

TEST(Fit, ReproducesSamplesAndIsMinimal) {
    for (const auto& d : detected) {
        const auto samples = hsum_samples(d.n, d.m_max);
        const auto r = fit({samples, 3, d.period});
        ASSERT_TRUE(r.ok());
        for (const auto& s : samples) EXPECT_EQ(quasi_eval(*r.poly, s.m), s.value);
        for (int p = 1; p < r.poly->period(); ++p) {
            const auto smaller = fit({samples, 3, p});
            EXPECT_FALSE(smaller.ok());
            EXPECT_EQ(smaller.status, FitStatus::NoPeriodFits);
        }
    }
}

TEST(Fit, FailureModesAreDistinct) {
    std::vector<Sample> alternating;
    for (std::int64_t m = 0; m < 40; ++m) alternating.push_back({m, Rational(m % 7 == 0 ? 1 : 0)});
    const auto none = fit({alternating, 1, 3});
    EXPECT_EQ(none.status, FitStatus::NoPeriodFits);
    EXPECT_EQ(none.tested_up_to, 3);

    std::vector<Sample> few;
    for (std::int64_t m = 0; m < 6; ++m) few.push_back({m, Rational(m * m % 5)});
    const auto short_run = fit({few, 3, 4});
    EXPECT_EQ(short_run.status, FitStatus::InsufficientSamples);
    EXPECT_FALSE(short_run.message.empty());
    EXPECT_THROW(fit({few, -1, 4}), DomainError);
}
