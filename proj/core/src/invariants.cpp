#include "symdiff/invariants.hpp"

#include <string>

#include "symdiff/latticesum.hpp"

namespace symdiff {

namespace {

void require_nm(int n, std::int64_t m) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (m < 0) throw DomainError("m must be >= 0");
}

Rational h1_omega_polynomial_part(int n) {
    const BigInt b = n;
    const BigInt num = b * b * b * b * b + 19 * b * b * b * b + 83 * b * b * b + 137 * b * b + 80 * b;
    const BigInt den = 6 * (b + 1) * (b + 1) * (b + 2) * (b + 2);
    return Rational(num, den);
}

} // namespace

ChernLocal chern_local(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    ChernLocal c;
    c.n = n;
    c.c1sq = Rational();
    // Euler number of the chain of n curves minus 1/|G|.
    c.c2 = Rational(n + 1) - Rational(1, n + 1);
    c.s2 = c.c1sq - c.c2;
    return c;
}

Rational chi_orb(int n, std::int64_t m) {
    require_nm(n, m);
    const ChernLocal c = chern_local(n);
    const Rational mq(m);
    return c.s2 / Rational(6) * mq * mq * mq - c.c2 / Rational(2) * mq * mq -
           (c.c1sq + Rational(3) * c.c2) / Rational(12) * mq + (c.c1sq + c.c2) / Rational(12);
}

CycloElement mu_cyclotomic(int n, std::int64_t m) {
    require_nm(n, m);
    const auto field = CyclotomicField::create(n + 1);
    CycloElement total = field->zero();
    for (long long j = 1; j <= n; ++j) {
        // g = diag(zeta^j, zeta^(jn)) acting on the cotangent space.
        CycloElement trace = field->zero();
        for (long long q = 0; q <= m; ++q) trace += field->zeta_power(j * (m - q) + j * n * q);
        const CycloElement det = (field->one() - field->zeta_power(j)) * (field->one() - field->zeta_power(j * n));
        total += trace * invert(det);
    }
    total *= Rational(1, n + 1);
    return total;
}

Rational mu(int n, std::int64_t m) {
    const CycloElement value = mu_cyclotomic(n, m);
    if (!is_rational(value)) {
        throw ArithmeticFault("group average for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                              " has irrational cyclotomic coordinates");
    }
    return rational_part(value);
}

Rational h1(int n, std::int64_t m) { return mu(n, m) - chi_orb(n, m) - Rational(hsum(n, m)); }

Rational h1_omega(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    Rational harmonic;
    for (int k = 1; k <= n; ++k) harmonic += Rational(1, static_cast<long long>(k) * k);
    return h1_omega_polynomial_part(n) - Rational(4, 3) * harmonic;
}

H1OmegaLimitReport h1_omega_limit_report(int n_max, const Rational& threshold) {
    if (n_max < 2) throw DomainError("n_max must be >= 2");
    H1OmegaLimitReport report;
    report.n_max = n_max;
    report.threshold = threshold;
    report.strictly_increasing = true;
    Rational harmonic;
    Rational previous;
    for (int n = 1; n <= n_max; ++n) {
        harmonic += Rational(1, static_cast<long long>(n) * n);
        const Rational value = h1_omega_polynomial_part(n) - Rational(4, 3) * harmonic;
        if (n > 1 && !(value > previous)) report.strictly_increasing = false;
        if (!report.first_above_threshold && value > threshold) report.first_above_threshold = n;
        previous = value;
    }
    report.value_at_max = previous;
    report.growth_ratio = (Rational(6) * previous / Rational(n_max)).to_f64();
    return report;
}

} // namespace symdiff
