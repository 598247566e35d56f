#include "symdiff/quasi_polynomial.hpp"

namespace symdiff {

QuasiPolynomial::QuasiPolynomial(std::vector<std::vector<Rational>> branches)
    : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw DomainError("quasi-polynomial needs at least one branch");
    }
    const auto len = branches_.front().size();
    if (len == 0) {
        throw DomainError("quasi-polynomial branches must be non-empty");
    }
    for (const auto& b : branches_) {
        if (b.size() != len) {
            throw DomainError("quasi-polynomial branches must share one length");
        }
    }
}

Rational QuasiPolynomial::operator()(std::int64_t m) const {
    if (m < 0) {
        throw DomainError("quasi-polynomial evaluated at negative m");
    }
    const auto& coeffs = branches_[static_cast<std::size_t>(m % period())];
    const Rational x(static_cast<long long>(m));
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace symdiff
