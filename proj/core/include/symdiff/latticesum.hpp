#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symdiff/monoblocks.hpp"
#include "symdiff/rational.hpp"

namespace symdiff {

/// Point of the (i, khat) plane: x1 = i, x2 = khat.
struct LatticePoint {
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// a*x1 + b*x2 <= c
struct HalfPlane {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

/// Support polygon of the weight function for fixed (n, m). Stored as the four
/// half-planes of its upper half {x2 >= 0}; the full polygon is the union with its
/// mirror image under x2 -> -x2.
class Polygon {
public:
    Polygon(int n, std::int64_t m);

    int n() const { return n_; }
    std::int64_t m() const { return m_; }
    const std::vector<HalfPlane>& upper_half_planes() const { return half_planes_; }

    bool contains(const LatticePoint& p) const;
    bool contains(const Rational& x1, const Rational& x2) const;

    /// Inclusive x1 range of the row at height x2 (empty when lo > hi).
    std::int64_t row_min(std::int64_t x2) const;
    std::int64_t row_max(std::int64_t x2) const;
    std::int64_t max_height() const { return m_ + 1; }

private:
    int n_;
    std::int64_t m_;
    std::vector<HalfPlane> half_planes_;
};

/// x1 + (n+1)*x2 == m (mod 2).
bool parity_ok(int n, std::int64_t m, const LatticePoint& p);

/// h_{n,m}(x) = min{ sum_{r=0}^{n-1} alpha_r(x), beta(x) } at parity-valid points of the
/// polygon; 0 everywhere else.
std::int64_t weight(int n, std::int64_t m, const LatticePoint& p);

/// The same piecewise-affine weight evaluated at an arbitrary rational point, with no
/// polygon or parity restriction. Used to check the polygon decomposition.
Rational weight_at(int n, const Rational& m, const Rational& x1, const Rational& x2);

/// Every integer point of the full polygon, ordered by increasing x2, then x1.
std::vector<LatticePoint> lattice_points(const Polygon& poly);
void for_each_lattice_point(const Polygon& poly, const std::function<void(const LatticePoint&)>& fn);

/// Weighted lattice sum over the polygon: the obstruction count for degree-m symmetric
/// differentials on the punctured A_n resolution.
std::int64_t hsum(int n, std::int64_t m);

/// Same sum with the x2 rows split across worker threads. Partition-independent.
std::int64_t hsum_parallel(int n, std::int64_t m, unsigned threads);

/// min{ sum_{r=0}^{n-1} codim_reg(t, r), dim_vreg(t) } for one block.
std::int64_t hsum_triple(const TripleIndex& t);

/// Sum of hsum_triple over admissible triples with 0 <= i <= (n+1)m + n.
std::int64_t hsum_by_triples(int n, std::int64_t m);

} // namespace symdiff
