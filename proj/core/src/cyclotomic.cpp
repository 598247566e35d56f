#include "symdiff/cyclotomic.hpp"

#include <algorithm>
#include <utility>

namespace symdiff {

namespace poly {

void trim(RationalPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const RationalPoly& p) {
    RationalPoly t = p;
    trim(t);
    return static_cast<int>(t.size()) - 1;
}

RationalPoly add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    trim(out);
    return out;
}

RationalPoly sub(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    trim(out);
    return out;
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q, RationalPoly& r) {
    RationalPoly divisor = b;
    trim(divisor);
    if (divisor.empty()) {
        throw DivisionByZero();
    }
    r = a;
    trim(r);
    const int db = static_cast<int>(divisor.size()) - 1;
    const int dq = static_cast<int>(r.size()) - 1 - db;
    q.assign(dq >= 0 ? dq + 1 : 0, Rational());
    const Rational lead_inv = divisor.back().inverse();
    while (static_cast<int>(r.size()) - 1 >= db) {
        const int shift = static_cast<int>(r.size()) - 1 - db;
        const Rational factor = r.back() * lead_inv;
        q[shift] = factor;
        for (int k = 0; k <= db; ++k) r[shift + k] -= factor * divisor[k];
        trim(r);
    }
    trim(q);
}

Rational eval(const RationalPoly& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace poly

RationalPoly cyclotomic_polynomial(int order) {
    if (order < 1) {
        throw DomainError("cyclotomic order must be >= 1");
    }
    RationalPoly result(order + 1);
    result[0] = Rational(-1);
    result[order] = Rational(1);
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        RationalPoly q, r;
        poly::divmod(result, cyclotomic_polynomial(d), q, r);
        if (!r.empty()) {
            throw ArithmeticFault("cyclotomic division left a remainder");
        }
        result = std::move(q);
    }
    return result;
}

int totient(int order) {
    int result = order;
    int n = order;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::create(int order) {
    return std::make_shared<CyclotomicField>(Private{}, order);
}

CyclotomicField::CyclotomicField(Private, int order)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {}

CycloElement CyclotomicField::zero() const {
    return CycloElement(shared_from_this(), std::vector<Rational>(degree()));
}

CycloElement CyclotomicField::one() const { return from_rational(Rational(1)); }

CycloElement CyclotomicField::from_rational(const Rational& value) const {
    std::vector<Rational> c(degree());
    c[0] = value;
    return CycloElement(shared_from_this(), std::move(c));
}

CycloElement CyclotomicField::zeta_power(long long k) const {
    long long e = k % order_;
    if (e < 0) e += order_;
    RationalPoly p(static_cast<std::size_t>(e) + 1);
    p[e] = Rational(1);
    return from_poly(p);
}

CycloElement CyclotomicField::from_poly(const RationalPoly& p) const {
    RationalPoly q, r;
    poly::divmod(p, modulus_, q, r);
    r.resize(degree());
    return CycloElement(shared_from_this(), std::move(r));
}

CycloElement::CycloElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_->degree()) {
        throw DomainError("cyclotomic element needs exactly phi(N) coefficients");
    }
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

void CycloElement::check_same_field(const CycloElement& other) const {
    if (field_->order() != other.field_->order()) {
        throw DomainError("cyclotomic elements from different fields");
    }
}

CycloElement CycloElement::operator-() const {
    CycloElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    check_same_field(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    check_same_field(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) {
    check_same_field(rhs);
    *this = field_->from_poly(poly::mul(coeffs_, rhs.coeffs_));
    return *this;
}

CycloElement& CycloElement::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

CycloElement invert(const CycloElement& e) {
    if (e.is_zero()) {
        throw DivisionByZero();
    }
    // Track s with s*e == r (mod Phi_N) through the Euclidean remainder sequence.
    RationalPoly r0 = e.field().modulus();
    RationalPoly r1 = e.coeffs();
    poly::trim(r1);
    RationalPoly s0;
    RationalPoly s1{Rational(1)};
    while (poly::degree(r1) > 0) {
        RationalPoly q, r;
        poly::divmod(r0, r1, q, r);
        RationalPoly s = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) {
        throw ArithmeticFault("element shares a factor with the cyclotomic modulus");
    }
    RationalPoly inv = poly::mul(s1, RationalPoly{r1[0].inverse()});
    CycloElement result = e.field().from_poly(inv);
    if (!(result * e == e.field().one())) {
        throw ArithmeticFault("Bezout identity failed while inverting a cyclotomic element");
    }
    return result;
}

Rational rational_part(const CycloElement& e) { return e.coeffs().front(); }

bool is_rational(const CycloElement& e) {
    const auto& c = e.coeffs();
    return std::all_of(c.begin() + 1, c.end(), [](const Rational& v) { return v.is_zero(); });
}

} // namespace symdiff
