#pragma once

#include <cstdint>
#include <vector>

#include "symdiff/rational.hpp"

namespace symdiff {

/// A function of m whose coefficients depend on m mod period. Branch r holds the
/// coefficients (constant first) used for every m with m mod period == r.
class QuasiPolynomial {
public:
    /// All branches must have the same length; period == branches.size() >= 1.
    explicit QuasiPolynomial(std::vector<std::vector<Rational>> branches);

    int period() const { return static_cast<int>(branches_.size()); }
    int degree() const { return static_cast<int>(branches_.front().size()) - 1; }
    const std::vector<std::vector<Rational>>& branches() const { return branches_; }
    const std::vector<Rational>& branch(int residue) const { return branches_.at(residue); }

    /// Evaluates branch (m mod period) at m; m >= 0.
    Rational operator()(std::int64_t m) const;

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

private:
    std::vector<std::vector<Rational>> branches_;
};

inline Rational quasi_eval(const QuasiPolynomial& q, std::int64_t m) { return q(m); }

} // namespace symdiff
