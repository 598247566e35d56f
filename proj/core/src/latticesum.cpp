#include "symdiff/latticesum.hpp"

#include <algorithm>
#include <thread>

namespace symdiff {

namespace {

void require_nm(int n, std::int64_t m) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (m < 0) throw DomainError("m must be >= 0");
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Twice alpha_{n,m,r}(x) before clamping: m - x1 + (2r-n+1) x2.
std::int64_t twice_alpha_raw(int n, std::int64_t m, std::int64_t x1, std::int64_t x2, int r) {
    return m - x1 + static_cast<std::int64_t>(2 * r - n + 1) * x2;
}

std::int64_t alpha(int n, std::int64_t m, std::int64_t x1, std::int64_t x2, int r) {
    const std::int64_t twice = twice_alpha_raw(n, m, x1, x2, r);
    if (twice <= 0) return 0;
    if (twice % 2 != 0) {
        throw ArithmeticFault("half-integral alpha at a parity-valid lattice point");
    }
    return twice / 2;
}

std::int64_t row_sum(int n, std::int64_t m, const Polygon& poly, std::int64_t x2) {
    std::int64_t total = 0;
    for (std::int64_t x1 = poly.row_min(x2); x1 <= poly.row_max(x2); ++x1) {
        total += weight(n, m, LatticePoint{x1, x2});
    }
    return total;
}

} // namespace

Polygon::Polygon(int n, std::int64_t m) : n_(n), m_(m) {
    require_nm(n, m);
    half_planes_ = {
        HalfPlane{-1, 0, 0},
        HalfPlane{0, -1, 0},
        HalfPlane{1, -(n - 1), m},
        HalfPlane{-1, n + 1, m + 2},
    };
}

bool Polygon::contains(const LatticePoint& p) const {
    const std::int64_t y = abs64(p.x2);
    for (const auto& h : half_planes_) {
        if (h.a * p.x1 + h.b * y > h.c) return false;
    }
    return true;
}

bool Polygon::contains(const Rational& x1, const Rational& x2) const {
    const Rational y = x2.abs();
    for (const auto& h : half_planes_) {
        if (Rational(h.a) * x1 + Rational(h.b) * y > Rational(h.c)) return false;
    }
    return true;
}

std::int64_t Polygon::row_min(std::int64_t x2) const {
    const std::int64_t y = abs64(x2);
    return std::max<std::int64_t>(0, (n_ + 1) * y - m_ - 2);
}

std::int64_t Polygon::row_max(std::int64_t x2) const {
    const std::int64_t y = abs64(x2);
    if (y > max_height()) return -1;
    return m_ + (n_ - 1) * y;
}

bool parity_ok(int n, std::int64_t m, const LatticePoint& p) {
    return ((p.x1 + static_cast<std::int64_t>(n + 1) * p.x2 - m) % 2) == 0;
}

std::int64_t weight(int n, std::int64_t m, const LatticePoint& p) {
    require_nm(n, m);
    if (!parity_ok(n, m, p)) return 0;
    if (!Polygon(n, m).contains(p)) return 0;
    // The weight is even in x2; evaluate at the reflected point in the upper half.
    const std::int64_t x1 = p.x1;
    const std::int64_t x2 = abs64(p.x2);

    std::int64_t alpha_sum = 0;
    for (int r = 0; r <= n - 1; ++r) alpha_sum += alpha(n, m, x1, x2, r);
    const std::int64_t beta =
        std::max<std::int64_t>(0, m + 1 - alpha(n, m, x1, x2, -1) - alpha(n, m, x1, x2, n));
    return std::min(alpha_sum, beta);
}

Rational weight_at(int n, const Rational& m, const Rational& x1, const Rational& x2) {
    auto alpha_q = [&](int r) {
        Rational v = (m - x1 + Rational(2 * r - n + 1) * x2) / Rational(2);
        return v.sign() > 0 ? v : Rational();
    };
    Rational alpha_sum;
    for (int r = 0; r <= n - 1; ++r) alpha_sum += alpha_q(r);
    Rational beta = m + Rational(1) - alpha_q(-1) - alpha_q(n);
    if (beta.sign() < 0) beta = Rational();
    return std::min(alpha_sum, beta);
}

void for_each_lattice_point(const Polygon& poly, const std::function<void(const LatticePoint&)>& fn) {
    const std::int64_t h = poly.max_height();
    for (std::int64_t x2 = -h; x2 <= h; ++x2) {
        for (std::int64_t x1 = poly.row_min(x2); x1 <= poly.row_max(x2); ++x1) {
            fn(LatticePoint{x1, x2});
        }
    }
}

std::vector<LatticePoint> lattice_points(const Polygon& poly) {
    std::vector<LatticePoint> out;
    for_each_lattice_point(poly, [&out](const LatticePoint& p) { out.push_back(p); });
    return out;
}

std::int64_t hsum(int n, std::int64_t m) {
    const Polygon poly(n, m);
    std::int64_t total = 0;
    for (std::int64_t x2 = -poly.max_height(); x2 <= poly.max_height(); ++x2) {
        total += row_sum(n, m, poly, x2);
    }
    return total;
}

std::int64_t hsum_parallel(int n, std::int64_t m, unsigned threads) {
    const Polygon poly(n, m);
    threads = std::max(1u, threads);
    const std::int64_t h = poly.max_height();
    const std::int64_t rows = 2 * h + 1;
    std::vector<std::int64_t> partial(threads, 0);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::int64_t row = w; row < rows; row += threads) {
                    partial[w] += row_sum(n, m, poly, row - h);
                }
            });
        }
    }
    std::int64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

std::int64_t hsum_triple(const TripleIndex& t) {
    std::int64_t codim_sum = 0;
    for (int r = 0; r <= t.n - 1; ++r) codim_sum += codim_reg(t, r);
    return std::min(codim_sum, dim_vreg(t));
}

std::int64_t hsum_by_triples(int n, std::int64_t m) {
    require_nm(n, m);
    const std::int64_t i_max = static_cast<std::int64_t>(n + 1) * m + n;
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= i_max; ++i) {
        const std::int64_t kmax = (i + m) / (n + 1);
        for (std::int64_t khat = -kmax; khat <= kmax; ++khat) {
            TripleIndex t{n, khat, i, m};
            if (!satisfies_parity(t)) continue;
            total += hsum_triple(t);
        }
    }
    return total;
}

} // namespace symdiff
