#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdiff/quasi_polynomial.hpp"
#include "symdiff/rational.hpp"

namespace symdiff {

struct Sample {
    std::int64_t m = 0;
    Rational value;
};

struct FitRequest {
    std::vector<Sample> values;
    int degree = 3;
    int max_period = 12;
};

enum class FitStatus { Ok, NoPeriodFits, InsufficientSamples };

struct FitResult {
    FitStatus status = FitStatus::NoPeriodFits;
    std::optional<QuasiPolynomial> poly;
    /// Largest period that was fully tested.
    int tested_up_to = 0;
    std::string message;

    bool ok() const { return status == FitStatus::Ok; }
};

/// Smallest period p <= max_period whose residue-class interpolants (through the first
/// degree+1 samples of each class) reproduce every other sample of that class. Each class
/// needs degree+3 samples; a period that lacks them stops the scan with
/// InsufficientSamples.
FitResult fit(const FitRequest& req);

/// Coefficients c_0..c_d of the unique polynomial of degree <= d through d+1 points.
std::vector<Rational> interpolate(const std::vector<Sample>& points);

struct DegreeCoefficients {
    int degree = 0;
    /// Distinct values across branches, ascending.
    std::vector<Rational> values;
    bool branch_independent = false;
};

std::vector<DegreeCoefficients> coefficient_report(const QuasiPolynomial& q);

} // namespace symdiff
