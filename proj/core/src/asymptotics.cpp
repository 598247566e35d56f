#include "symdiff/asymptotics.hpp"

#include <algorithm>

#include "symdiff/latticesum.hpp"

namespace symdiff {

namespace {

// a*x1 + b*x2 + c >= 0
struct ClipLine {
    Rational a, b, c;
    Rational eval(const RationalPoint& p) const { return a * p.x1 + b * p.x2 + c; }
};

std::vector<RationalPoint> clip(const std::vector<RationalPoint>& poly, const ClipLine& line) {
    std::vector<RationalPoint> out;
    const std::size_t count = poly.size();
    for (std::size_t k = 0; k < count; ++k) {
        const RationalPoint& cur = poly[k];
        const RationalPoint& nxt = poly[(k + 1) % count];
        const Rational fc = line.eval(cur);
        const Rational fn = line.eval(nxt);
        if (fc.sign() >= 0) out.push_back(cur);
        if ((fc.sign() > 0 && fn.sign() < 0) || (fc.sign() < 0 && fn.sign() > 0)) {
            const Rational t = fc / (fc - fn);
            out.push_back(RationalPoint{cur.x1 + t * (nxt.x1 - cur.x1), cur.x2 + t * (nxt.x2 - cur.x2)});
        }
    }
    return out;
}

Rational cross(const RationalPoint& o, const RationalPoint& p, const RationalPoint& q) {
    return (p.x1 - o.x1) * (q.x2 - o.x2) - (p.x2 - o.x2) * (q.x1 - o.x1);
}

Rational signed_area(const std::vector<RationalPoint>& v) {
    Rational twice;
    for (std::size_t k = 1; k + 1 < v.size(); ++k) twice += cross(v[0], v[k], v[k + 1]);
    return twice / Rational(2);
}

void require_n(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
}

} // namespace

std::vector<RationalPoint> breakpoints(int n, const Rational& m) {
    require_n(n);
    std::vector<RationalPoint> out;
    const Rational mp1 = m + Rational(1);
    for (int j = 1; j <= n + 1; ++j) {
        const Rational x1 = Rational(2 * j) * mp1 / Rational(j - n - 3) +
                            Rational(2 * (j - 1)) * mp1 / Rational(n + 2 - j) + m;
        const Rational x2 = Rational(2) * mp1 / Rational((j - n - 3) * (j - n - 2));
        out.push_back(RationalPoint{x1, x2});
    }
    return out;
}

std::vector<PolygonPiece> pieces(int n, const Rational& m) {
    const auto v = breakpoints(n, m);  // v[j-1] is v_j
    const RationalPoint origin{Rational(), Rational()};
    const RationalPoint foot{m, Rational()};
    const RationalPoint inner_foot{(m * Rational(n) - Rational(2)) / Rational(n + 2), Rational()};
    const RationalPoint low_axis{Rational(), m / Rational(n + 1)};
    const RationalPoint high_axis{Rational(), (m + Rational(2)) / Rational(n + 1)};

    std::vector<PolygonPiece> out;
    out.push_back(PolygonPiece{0, m, {low_axis, v[0], inner_foot, origin},
                               AffineWeight{Rational(1), Rational(), Rational(), Rational(1)}});
    out.push_back(PolygonPiece{1, m, {v[0], v[1], foot, inner_foot},
                               AffineWeight{Rational(-n, 2), Rational(), Rational(n, 2), Rational()}});
    for (int j = 2; j <= n; ++j) {
        // (1/2)(j-1-n)(x1 - (j-1)x2 - m)
        const Rational s(j - 1 - n, 2);
        out.push_back(PolygonPiece{j, m, {v[j - 1], v[j], foot},
                                   AffineWeight{s, -s * Rational(j - 1), -s, Rational()}});
    }
    std::vector<RationalPoint> top{high_axis};
    for (int j = n + 1; j >= 1; --j) top.push_back(v[j - 1]);
    top.push_back(low_axis);
    out.push_back(PolygonPiece{n + 1, m, std::move(top),
                               AffineWeight{Rational(1, 2), Rational(-(n + 1), 2), Rational(1, 2),
                                            Rational(1)}});
    return out;
}

std::vector<PolygonPiece> convex_pieces(int n, const Rational& m) {
    auto all = pieces(n, m);
    PolygonPiece top = all.back();
    all.pop_back();
    const auto v = breakpoints(n, m);
    std::vector<RationalPoint> rest = top.vertices;
    int sub = 0;
    for (int j = 2; j <= n; ++j) {
        const Rational cut = v[j - 1].x1;
        PolygonPiece left = top;
        left.label = n + 1 + sub++;
        left.vertices = clip(rest, ClipLine{Rational(-1), Rational(), cut});
        rest = clip(rest, ClipLine{Rational(1), Rational(), -cut});
        all.push_back(std::move(left));
    }
    top.label = n + 1 + sub;
    top.vertices = std::move(rest);
    all.push_back(std::move(top));
    return all;
}

PolygonPiece clip_to_quadrant(const PolygonPiece& piece) {
    PolygonPiece out = piece;
    out.vertices = clip(out.vertices, ClipLine{Rational(1), Rational(), Rational()});
    out.vertices = clip(out.vertices, ClipLine{Rational(), Rational(1), Rational()});
    return out;
}

Rational polygon_area(const std::vector<RationalPoint>& vertices) {
    return signed_area(vertices).abs();
}

Rational integrate_piece(const PolygonPiece& piece) {
    const auto& v = piece.vertices;
    if (v.size() < 3) return Rational();
    Rational total;
    Rational twice_area;
    const Rational w0 = piece.value_at(v[0]);
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        const Rational twice = cross(v[0], v[k], v[k + 1]);
        if (twice.is_zero()) continue;
        twice_area += twice;
        total += twice * (w0 + piece.value_at(v[k]) + piece.value_at(v[k + 1]));
    }
    // (twice/2) * (sum/3) per triangle; orientation fixed by the total signed area.
    total /= Rational(6);
    return twice_area.sign() < 0 ? -total : total;
}

Rational upper_integral(int n, const Rational& m) {
    Rational total;
    for (const auto& piece : pieces(n, m)) total += integrate_piece(clip_to_quadrant(piece));
    return total;
}

Rational h0_omega(int n) {
    require_n(n);
    Rational harmonic;
    for (int j = 1; j <= n; ++j) harmonic += Rational(1, static_cast<long long>(j) * j);
    const BigInt bn = n;
    const BigInt num = 12 * bn * bn * bn * bn + 65 * bn * bn * bn + 117 * bn * bn + 72 * bn;
    const BigInt den = 6 * (bn + 1) * (bn + 1) * (bn + 2) * (bn + 2);
    return Rational(4, 3) * harmonic - Rational(num, den);
}

AsymptoticReport h0_asymptotic_check(int n, const std::vector<std::int64_t>& m_list,
                                     std::int64_t fit_limit) {
    if (m_list.empty()) throw DomainError("m_list must be nonempty");
    AsymptoticReport report;
    report.n = n;
    const Rational lead = h0_omega(n);
    for (auto m : m_list) {
        AsymptoticRow row;
        row.m = m;
        row.hsum = hsum(n, m);
        const Rational mq(m);
        row.predicted = lead * (mq * mq * mq + Rational(3) * mq * mq);
        row.residual = Rational(row.hsum) - row.predicted;
        if (m >= 1) {
            const Rational ratio = row.residual.abs() / mq;
            report.max_ratio = std::max(report.max_ratio, ratio);
            if (m <= fit_limit) report.fitted_bound = std::max(report.fitted_bound, ratio);
        }
        report.rows.push_back(std::move(row));
    }
    report.bounded = report.max_ratio <= report.fitted_bound;
    return report;
}

IntegralRow integral_vs_sum(int n, std::int64_t m) {
    if (m < 0) throw DomainError("m must be >= 0");
    IntegralRow row;
    row.n = n;
    row.m = m;
    row.hsum = hsum(n, m);
    row.integral = m == 0 ? Rational() : upper_integral(n, Rational(m));
    row.residual = Rational(row.hsum) - row.integral;
    return row;
}

IntegralCheckReport integral_vs_sum_check(int n, std::vector<std::int64_t> m_list) {
    std::sort(m_list.begin(), m_list.end());
    m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());
    if (m_list.size() < 3 || m_list.front() < 1) {
        throw DomainError("integral check needs at least three distinct m >= 1");
    }
    IntegralCheckReport report;
    report.n = n;
    for (auto m : m_list) report.rows.push_back(integral_vs_sum(n, m));
    const auto& first = report.rows[0];
    const auto& second = report.rows[1];
    report.slope = (second.residual - first.residual) / Rational(second.m - first.m);
    report.intercept = first.residual - report.slope * Rational(first.m);
    report.constant = report.slope.abs() + report.intercept.abs() / Rational(first.m);
    report.passed = true;
    for (const auto& row : report.rows) {
        if (row.residual.abs() > report.constant * Rational(row.m)) report.passed = false;
    }
    return report;
}

} // namespace symdiff
