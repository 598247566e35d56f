#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <symdiff/asymptotics.hpp>
#include <symdiff/latticesum.hpp>
#include <symdiff/quasifit.hpp>

using namespace symdiff;

namespace {

bool inside(const std::vector<RationalPoint>& poly, double x, double y) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const double xi = poly[i].x1.to_f64(), yi = poly[i].x2.to_f64();
        const double xj = poly[j].x1.to_f64(), yj = poly[j].x2.to_f64();
        if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi) in = !in;
    }
    return in;
}

// Midpoint rule on a fine grid over the bounding box.
template <class F>
double riemann(const std::vector<RationalPoint>& poly, F f, int cells) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& p : poly) {
        x0 = std::min(x0, p.x1.to_f64());
        x1 = std::max(x1, p.x1.to_f64());
        y0 = std::min(y0, p.x2.to_f64());
        y1 = std::max(y1, p.x2.to_f64());
    }
    const double hx = (x1 - x0) / cells, hy = (y1 - y0) / cells;
    double total = 0.0;
    for (int a = 0; a < cells; ++a)
        for (int b = 0; b < cells; ++b) {
            const double x = x0 + (a + 0.5) * hx, y = y0 + (b + 0.5) * hy;
            if (inside(poly, x, y)) total += f(x, y);
        }
    return total * hx * hy;
}

RationalPoint centroid(const std::vector<RationalPoint>& v) {
    Rational sx, sy;
    for (const auto& p : v) {
        sx += p.x1;
        sy += p.x2;
    }
    return {sx / Rational(static_cast<long>(v.size())), sy / Rational(static_cast<long>(v.size()))};
}

std::vector<RationalPoint> upper_polygon(int n, const Rational& m) {
    return {{Rational(0), Rational(0)},
            {m, Rational(0)},
            {Rational(n) * (m + Rational(1)) - Rational(1), m + Rational(1)},
            {Rational(0), (m + Rational(2)) / Rational(n + 1)}};
}

} // namespace

TEST(Integrate, TextbookShapes) {
    PolygonPiece tri{0, Rational(0), {{0, 0}, {1, 0}, {0, 1}}, {1, 0, 0, 0}};
    EXPECT_EQ(integrate_piece(tri), Rational(1, 6));
    PolygonPiece square{0, Rational(0), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 0, 0, 1}};
    EXPECT_EQ(integrate_piece(square), Rational(1));
    std::reverse(square.vertices.begin(), square.vertices.end());
    EXPECT_EQ(integrate_piece(square), Rational(1));
    // L-shape (non-convex), weight x2: 1 from the bottom bar plus 3/2 from the column.
    PolygonPiece ell{0, Rational(0), {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, {0, 1, 0, 0}};
    EXPECT_EQ(integrate_piece(ell), Rational(5, 2));
    EXPECT_EQ(polygon_area(ell.vertices), Rational(3));
    PolygonPiece degenerate{0, Rational(0), {{0, 0}, {1, 1}, {2, 2}}, {0, 0, 0, 1}};
    EXPECT_EQ(integrate_piece(degenerate), Rational(0));
}

TEST(Integrate, MatchesRiemannRefinement) {
    const auto ps = pieces(1, Rational(4));
    const auto& p0 = ps[0];
    EXPECT_EQ(p0.vertices[1], (RationalPoint{Rational(2, 3), Rational(5, 3)}));
    const double exact = integrate_piece(p0).to_f64();
    const double approx = riemann(p0.vertices, [](double x, double) { return x + 1.0; }, 1500);
    EXPECT_NEAR(exact, approx, 1e-3);
}

TEST(Pieces, ListedVerticesAndWeights) {
    const Rational m(7);
    const auto ps = pieces(1, m);
    ASSERT_EQ(ps.size(), 3u);
    EXPECT_EQ(ps[0].vertices[2], (RationalPoint{(m - Rational(2)) / Rational(3), Rational(0)}));
    EXPECT_EQ(ps[0].value_at({Rational(0), m / Rational(2)}), Rational(1));
    EXPECT_EQ(ps[2].value_at({Rational(0), (m + Rational(2)) / Rational(2)}), Rational(0));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(pieces(n, m).size(), static_cast<std::size_t>(n + 2));
        const auto v = breakpoints(n, m);
        EXPECT_EQ(v.back(), (RationalPoint{Rational(n) * (m + Rational(1)) - Rational(1), m + Rational(1)}));
    }
}

TEST(Pieces, AffineWeightMatchesPiecewiseWeight) {
    for (int n = 1; n <= 7; ++n)
        for (long mm : {12L, 13L, 30L, 31L}) {
            const Rational m(mm);
            for (const auto& piece : pieces(n, m)) {
                for (const auto& v : piece.vertices) {
                    EXPECT_EQ(piece.value_at(v), weight_at(n, m, v.x1, v.x2)) << "n=" << n << " piece " << piece.label;
                    EXPECT_GE(piece.value_at(v), Rational(0));
                }
                const auto c = centroid(piece.vertices);
                EXPECT_EQ(piece.value_at(c), weight_at(n, m, c.x1, c.x2)) << "n=" << n << " piece " << piece.label;
            }
        }
}

TEST(Pieces, TileTheUpperHalf) {
    for (int n = 1; n <= 7; ++n)
        for (long mm : {6L, 10L, 25L}) {
            const Rational m(mm);
            Rational sum;
            for (const auto& piece : pieces(n, m)) sum += polygon_area(piece.vertices);
            EXPECT_EQ(sum, polygon_area(upper_polygon(n, m)));
        }
}

TEST(Pieces, ConvexRefinementPreservesIntegral) {
    for (int n = 1; n <= 6; ++n) {
        const Rational m(20);
        Rational coarse, fine;
        for (const auto& p : pieces(n, m)) coarse += integrate_piece(p);
        const auto refined = convex_pieces(n, m);
        EXPECT_EQ(refined.size(), static_cast<std::size_t>(2 * n + 1));
        for (const auto& p : refined) fine += integrate_piece(p);
        EXPECT_EQ(coarse, fine);
    }
}

TEST(Pieces, UpperIntegralAgreesWithRiemannSumOfWeight) {
    const int n = 2;
    const Rational m(6);
    const double exact = upper_integral(n, m).to_f64();
    const auto poly = upper_polygon(n, m);
    const double mm = 6.0;
    auto w = [&](double x, double y) {
        auto alpha = [&](int r) { return std::max(0.0, (mm - x + (2 * r - n + 1) * y) / 2); };
        double s = 0.0;
        for (int r = 0; r < n; ++r) s += alpha(r);
        return std::min(s, std::max(0.0, mm + 1 - alpha(-1) - alpha(n)));
    };
    const double approx = riemann(poly, w, 800);
    EXPECT_NEAR(exact, approx, 0.05);
}

TEST(Pieces, IntegralIsCubicWithLeadingCoefficientH0) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Sample> pts;
        for (long mm : {10L, 20L, 30L, 40L}) pts.push_back({mm, upper_integral(n, Rational(mm))});
        const auto c = interpolate(pts);
        EXPECT_EQ(c[3], h0_omega(n));
        EXPECT_EQ(c[2], Rational(3) * h0_omega(n));
        EXPECT_EQ(upper_integral(n, Rational(50)), c[0] + c[1] * Rational(50) + c[2] * Rational(2500) + c[3] * Rational(125000));
    }
}

TEST(H0Omega, Values) {
    EXPECT_EQ(h0_omega(1), Rational(11, 108));
    EXPECT_EQ(h0_omega(2), Rational(29, 216));
    EXPECT_THROW(h0_omega(0), DomainError);
}

TEST(H0Omega, IncreasingAndBelowLimit) {
    const double limit = 2.0 * std::numbers::pi * std::numbers::pi / 9.0 - 2.0;
    Rational prev = h0_omega(1);
    for (int n = 2; n <= 200; ++n) {
        const Rational cur = h0_omega(n);
        EXPECT_GT(cur, prev) << n;
        EXPECT_LT(cur.to_f64(), limit);
        prev = cur;
    }
    EXPECT_LT(limit - h0_omega(200).to_f64(), 0.01);
}

TEST(H0Asymptotic, ResidualMatchesExampleTailForA2) {
    std::vector<std::int64_t> ms;
    for (std::int64_t m = 0; m <= 60; ++m) ms.push_back(m);
    const auto rep = h0_asymptotic_check(2, ms, 12);
    EXPECT_TRUE(rep.bounded);
    EXPECT_EQ(rep.rows[0].residual, Rational(0));
    for (const auto& row : rep.rows)
        EXPECT_LE(row.residual.abs(), Rational(17, 72) * Rational(row.m) + Rational(143, 216));
    EXPECT_THROW(h0_asymptotic_check(2, {}, 12), DomainError);
}

TEST(IntegralVsSum, SmallCases) {
    const auto r = integral_vs_sum(2, 6);
    EXPECT_EQ(r.hsum, 44);
    EXPECT_LT(r.residual.abs(), Rational(6));
    EXPECT_EQ(integral_vs_sum(3, 0).integral, Rational(0));
    const auto rep = integral_vs_sum_check(1, {6, 12, 18, 24});
    EXPECT_TRUE(rep.passed);
    EXPECT_THROW(integral_vs_sum_check(1, {6, 12}), DomainError);
}
