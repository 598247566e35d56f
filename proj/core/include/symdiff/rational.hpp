#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "symdiff/error.hpp"

namespace symdiff {

using BigInt = mpz_class;

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v);
    Rational(const BigInt& v) : value_(v) {}

    /// Throws DivisionByZero when den == 0.
    Rational(long long num, long long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p", "p/q" (q may be negative; result is normalized).
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Largest integer <= value.
    BigInt floor() const;
    /// Smallest integer >= value.
    BigInt ceil() const;

    /// Integral value as int64; throws DomainError when non-integral or out of range.
    std::int64_t to_int64() const;

    /// Lossy conversion. Only meant for limit checks and reports.
    double to_f64() const { return value_.get_d(); }

    /// "p/q", or "p" when q == 1.
    std::string str() const;

    Rational abs() const;
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// floor(a / b) and ceil(a / b) for integers, toward -inf / +inf. b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Integral value of a BigInt as int64; throws DomainError on overflow.
std::int64_t to_int64(const BigInt& v);

} // namespace symdiff
