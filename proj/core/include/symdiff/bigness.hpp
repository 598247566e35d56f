#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdiff/rational.hpp"

namespace symdiff {

struct SingularityEntry {
    /// Du Val type letter; only "A" is supported.
    std::string type = "A";
    int n = 1;
    std::int64_t count = 1;
};

struct SurfaceConfig {
    std::string name;
    std::optional<Rational> s2;
    std::optional<Rational> c1sq;
    std::optional<Rational> c2;
    std::vector<SingularityEntry> singularities;

    /// Throws DomainError on missing or inconsistent Chern data, bad counts or indices,
    /// and unsupported singularity types.
    void validate() const;
    /// s2, or c1sq - c2 when s2 is not given.
    Rational second_segre() const;
};

enum class Verdict { Big, Inconclusive };

struct BignessVerdict {
    std::string name;
    /// sum of count * h1_omega(n)
    Rational local_sum;
    /// s2 / 6
    Rational global_term;
    Rational total;
    Verdict verdict = Verdict::Inconclusive;

    std::string verdict_text() const;
};

/// T = sum count * h1_omega(n) + s2/6; the cotangent bundle is big when T > 0. A
/// non-positive T says nothing either way.
BignessVerdict evaluate_criterion(const SurfaceConfig& cfg);

} // namespace symdiff
