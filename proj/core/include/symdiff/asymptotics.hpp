#pragma once

#include <cstdint>
#include <vector>

#include "symdiff/rational.hpp"

namespace symdiff {

struct RationalPoint {
    Rational x1;
    Rational x2;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// a*x1 + b*x2 + c*m + d
struct AffineWeight {
    Rational a, b, c, d;

    Rational at(const RationalPoint& p, const Rational& m) const { return a * p.x1 + b * p.x2 + c * m + d; }
};

struct PolygonPiece {
    int label = 0;
    Rational m;
    std::vector<RationalPoint> vertices;
    AffineWeight weight;

    Rational value_at(const RationalPoint& p) const { return weight.at(p, m); }
};

/// Vertices v_1..v_{n+1} of the upper-half decomposition. v_{n+1} = (n(m+1)-1, m+1).
std::vector<RationalPoint> breakpoints(int n, const Rational& m);

/// The n+2 pieces l = 0..n+1 of the upper half polygon, each carrying the affine
/// expression of the weight on it.
std::vector<PolygonPiece> pieces(int n, const Rational& m);

/// Optional refinement: the last piece cut by vertical segments above v_2..v_n, giving
/// convex parts. The other pieces are returned unchanged.
std::vector<PolygonPiece> convex_pieces(int n, const Rational& m);

/// Intersection with the quadrant x1 >= 0, x2 >= 0.
PolygonPiece clip_to_quadrant(const PolygonPiece& piece);

/// Signed-area-normalised area of a simple polygon.
Rational polygon_area(const std::vector<RationalPoint>& vertices);

/// Exact integral of the piece's affine weight over its polygon (fan triangulation,
/// area times vertex mean per triangle).
Rational integrate_piece(const PolygonPiece& piece);

/// Sum of the clipped piece integrals: the continuous counterpart of half the lattice sum.
Rational upper_integral(int n, const Rational& m);

/// (4/3) sum_{j<=n} 1/j^2 - (12n^4+65n^3+117n^2+72n) / (6(n+1)^2(n+2)^2).
Rational h0_omega(int n);

struct AsymptoticRow {
    std::int64_t m = 0;
    std::int64_t hsum = 0;
    Rational predicted;
    Rational residual;
};

struct AsymptoticReport {
    int n = 1;
    std::vector<AsymptoticRow> rows;
    /// max |residual|/m over rows with m <= fit_limit
    Rational fitted_bound;
    /// max |residual|/m over all rows with m >= 1
    Rational max_ratio;
    bool bounded = false;
};

/// Residuals hsum(n,m) - h0_omega(n)(m^3 + 3m^2). The linear bound is fitted on the
/// rows with 1 <= m <= fit_limit and must hold for every sampled m.
AsymptoticReport h0_asymptotic_check(int n, const std::vector<std::int64_t>& m_list,
                                     std::int64_t fit_limit);

struct IntegralRow {
    int n = 1;
    std::int64_t m = 0;
    std::int64_t hsum = 0;
    Rational integral;
    Rational residual;
};

IntegralRow integral_vs_sum(int n, std::int64_t m);

struct IntegralCheckReport {
    int n = 1;
    std::vector<IntegralRow> rows;
    /// residual ~ slope*m + intercept through the two smallest samples
    Rational slope;
    Rational intercept;
    /// |slope| + |intercept| / m_min
    Rational constant;
    bool passed = false;
};

/// Fits the residual hsum - U as an affine function of m through the two smallest
/// sampled m, takes C = |slope| + |intercept|/m_min, then checks |hsum - U| <= C m on
/// every sample.
IntegralCheckReport integral_vs_sum_check(int n, std::vector<std::int64_t> m_list);

} // namespace symdiff
