#include "symdiff/bigness.hpp"

#include "symdiff/invariants.hpp"

namespace symdiff {

void SurfaceConfig::validate() const {
    if (!s2 && !(c1sq && c2)) {
        throw DomainError("surface config needs s2 or both c1sq and c2");
    }
    if (s2 && c1sq && c2 && *s2 != *c1sq - *c2) {
        throw DomainError("s2 = " + s2->str() + " disagrees with c1sq - c2 = " + (*c1sq - *c2).str());
    }
    for (const auto& s : singularities) {
        if (s.type == "D" || s.type == "E") {
            throw DomainError("singularity type " + s.type + " is not supported (only A_n)");
        }
        if (s.type != "A") throw DomainError("unknown singularity type '" + s.type + "'");
        if (s.n < 1) throw DomainError("A_n singularity needs n >= 1");
        if (s.count < 1) throw DomainError("singularity count must be >= 1");
    }
}

Rational SurfaceConfig::second_segre() const {
    if (s2) return *s2;
    if (c1sq && c2) return *c1sq - *c2;
    throw DomainError("surface config needs s2 or both c1sq and c2");
}

std::string BignessVerdict::verdict_text() const {
    return verdict == Verdict::Big ? "big (criterion satisfied)" : "inconclusive";
}

BignessVerdict evaluate_criterion(const SurfaceConfig& cfg) {
    cfg.validate();
    BignessVerdict out;
    out.name = cfg.name;
    for (const auto& s : cfg.singularities) out.local_sum += Rational(s.count) * h1_omega(s.n);
    out.global_term = cfg.second_segre() / Rational(6);
    out.total = out.local_sum + out.global_term;
    out.verdict = out.total.sign() > 0 ? Verdict::Big : Verdict::Inconclusive;
    return out;
}

} // namespace symdiff
