#include "symdiff/quasifit.hpp"

#include <algorithm>
#include <string>

#include "symdiff/cyclotomic.hpp"

namespace symdiff {

std::vector<Rational> interpolate(const std::vector<Sample>& points) {
    const std::size_t count = points.size();
    if (count == 0) throw DomainError("interpolation needs at least one point");
    // Newton divided differences, then expansion into the power basis.
    std::vector<Rational> diff;
    diff.reserve(count);
    for (const auto& p : points) diff.push_back(p.value);
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t k = count - 1; k >= level; --k) {
            const std::int64_t span = points[k].m - points[k - level].m;
            if (span == 0) throw DomainError("interpolation nodes must be distinct");
            diff[k] = (diff[k] - diff[k - 1]) / Rational(span);
        }
    }
    RationalPoly acc{diff[count - 1]};
    for (std::size_t k = count - 1; k-- > 0;) {
        acc = poly::mul(acc, RationalPoly{Rational(-points[k].m), Rational(1)});
        acc = poly::add(acc, RationalPoly{diff[k]});
    }
    acc.resize(count);
    return acc;
}

FitResult fit(const FitRequest& req) {
    if (req.degree < 0) throw DomainError("degree must be >= 0");
    if (req.max_period < 1) throw DomainError("max_period must be >= 1");
    for (const auto& s : req.values) {
        if (s.m < 0) throw DomainError("sample points must be >= 0");
    }
    std::vector<Sample> samples = req.values;
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.m < b.m; });
    for (std::size_t k = 1; k < samples.size(); ++k) {
        if (samples[k].m == samples[k - 1].m) throw DomainError("duplicate sample point");
    }

    const std::size_t fit_count = static_cast<std::size_t>(req.degree) + 1;
    const std::size_t needed = fit_count + 2;
    FitResult result;
    for (int p = 1; p <= req.max_period; ++p) {
        std::vector<std::vector<Sample>> classes(p);
        for (const auto& s : samples) classes[s.m % p].push_back(s);
        for (int c = 0; c < p; ++c) {
            if (classes[c].size() < needed) {
                result.status = FitStatus::InsufficientSamples;
                result.message = "period " + std::to_string(p) + " has only " +
                                 std::to_string(classes[c].size()) + " samples in class " +
                                 std::to_string(c) + ", needs " + std::to_string(needed);
                return result;
            }
        }
        std::vector<std::vector<Rational>> branches;
        bool fits = true;
        for (int c = 0; c < p && fits; ++c) {
            const auto& cls = classes[c];
            std::vector<Sample> nodes(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(fit_count));
            auto coeffs = interpolate(nodes);
            for (std::size_t k = fit_count; k < cls.size(); ++k) {
                if (poly::eval(coeffs, Rational(cls[k].m)) != cls[k].value) {
                    fits = false;
                    break;
                }
            }
            branches.push_back(std::move(coeffs));
        }
        result.tested_up_to = p;
        if (fits) {
            result.status = FitStatus::Ok;
            result.poly = QuasiPolynomial(std::move(branches));
            return result;
        }
    }
    result.status = FitStatus::NoPeriodFits;
    result.message = "no period <= " + std::to_string(req.max_period) + " fits";
    return result;
}

std::vector<DegreeCoefficients> coefficient_report(const QuasiPolynomial& q) {
    std::vector<DegreeCoefficients> out;
    for (int d = 0; d <= q.degree(); ++d) {
        DegreeCoefficients row;
        row.degree = d;
        for (const auto& branch : q.branches()) row.values.push_back(branch[d]);
        std::sort(row.values.begin(), row.values.end());
        row.values.erase(std::unique(row.values.begin(), row.values.end()), row.values.end());
        row.branch_independent = row.values.size() == 1;
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace symdiff
