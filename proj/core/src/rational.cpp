#include "symdiff/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace symdiff {

static_assert(sizeof(long) == sizeof(long long), "LP64 target expected");

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParseError("empty integer in rational literal '" + std::string(whole) + "'");
    }
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) {
        throw ParseError("sign without digits in '" + std::string(whole) + "'");
    }
    for (std::size_t k = start; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw ParseError("invalid character in rational literal '" + std::string(whole) + "'");
        }
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

} // namespace

Rational::Rational(long long v) : value_(static_cast<long>(v)) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(long long num, long long den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt n = parse_integer(text.substr(0, slash), text);
    BigInt d = parse_integer(text.substr(slash + 1), text);
    return Rational(n, d);
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) {
        throw DomainError("expected an integral value, got " + str());
    }
    return symdiff::to_int64(value_.get_num());
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) {
        throw DivisionByZero();
    }
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b == 0) {
        throw DivisionByZero();
    }
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) {
        throw DomainError("integer " + v.get_str() + " does not fit in 64 bits");
    }
    return v.get_si();
}

} // namespace symdiff
