#pragma once

#include <memory>
#include <vector>

#include "symdiff/rational.hpp"

namespace symdiff {

/// Dense univariate polynomial over Q, constant coefficient first, no trailing zeros
/// (the zero polynomial is the empty vector).
using RationalPoly = std::vector<Rational>;

namespace poly {

void trim(RationalPoly& p);
int degree(const RationalPoly& p); // -1 for the zero polynomial
RationalPoly add(const RationalPoly& a, const RationalPoly& b);
RationalPoly sub(const RationalPoly& a, const RationalPoly& b);
RationalPoly mul(const RationalPoly& a, const RationalPoly& b);
/// Exact division with remainder, a = q*b + r, deg r < deg b. Throws DivisionByZero on b == 0.
void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q, RationalPoly& r);
Rational eval(const RationalPoly& p, const Rational& x);

} // namespace poly

/// Phi_N, computed as (x^N - 1) / prod_{d | N, d < N} Phi_d.
RationalPoly cyclotomic_polynomial(int order);

/// Euler totient.
int totient(int order);

class CycloElement;

/// The field Q[x]/Phi_N(x); the class of x is a primitive N-th root of unity.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
public:
    static std::shared_ptr<const CyclotomicField> create(int order);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const RationalPoly& modulus() const { return modulus_; }

    CycloElement zero() const;
    CycloElement one() const;
    CycloElement from_rational(const Rational& value) const;
    /// zeta^k for any integer k (negative exponents allowed).
    CycloElement zeta_power(long long k) const;
    /// Reduces an arbitrary polynomial in zeta modulo Phi_N.
    CycloElement from_poly(const RationalPoly& p) const;

    struct Private {};
    CyclotomicField(Private, int order);

private:
    int order_;
    RationalPoly modulus_;
};

/// Element of Q(zeta_N), stored as phi(N) coefficients in the power basis 1, zeta, ...
class CycloElement {
public:
    CycloElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

    const CyclotomicField& field() const { return *field_; }
    int order() const { return field_->order(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    CycloElement& operator*=(const CycloElement& rhs);
    CycloElement& operator*=(const Rational& rhs);

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
    friend CycloElement operator*(CycloElement a, const Rational& b) { return a *= b; }

    friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
    void check_same_field(const CycloElement& other) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
/// Throws DivisionByZero for zero and ArithmeticFault if the Bezout step fails.
CycloElement invert(const CycloElement& e);

/// Constant coordinate in the power basis.
Rational rational_part(const CycloElement& e);

/// True iff every non-constant coordinate vanishes.
bool is_rational(const CycloElement& e);

} // namespace symdiff
