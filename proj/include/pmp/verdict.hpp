#ifndef PMP_VERDICT_HPP
#define PMP_VERDICT_HPP

#include <optional>
#include <string>

#include "pmp/decompose.hpp"
#include "pmp/moments.hpp"
#include "pmp/monodromy.hpp"

namespace pmp {

enum class VerdictKind {
    VanishesWithCertificate,
    VanishesByTheorem1,
    DoesNotVanish,
    Theorem1NonVanishing,  // guaranteed nonzero moment beyond the scan bound
    Inconclusive,
};

std::string to_string(VerdictKind kind);

struct Witness {
    long i = 0;
    long j = 0;          // -1 for a single-moment witness
    FieldElement value;  // exactly nonzero, re-verified at report time
    bool is_double() const { return j >= 0; }
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<CompositionCertificate> certificate;
    std::optional<Witness> witness;
    long scan_bound = 0;
    long theorem = 0;  // which decision route produced this
    MultiplicityData mult;
    std::string note;

    bool definitive() const { return kind != VerdictKind::Inconclusive; }
};

long default_scan_bound(const ProblemInstance& inst);

/// Decision for indecomposable P: either Q factors exactly through P (all
/// moments provably vanish) or some moment is nonzero; the scan hunts for an
/// exact witness up to the bound.
Verdict theorem1_verdict(const ProblemInstance& inst, long scan_bound = -1);

/// General decision on the double-moment condition: a certificate proves
/// vanishing outright, otherwise a nonzero m_ij with j <= d_a + d_b - 2
/// exists and the scan looks for it.
Verdict theorem2_verdict(const ProblemInstance& inst, long scan_bound = -1);

/// Route by indecomposability.
Verdict decide(const ProblemInstance& inst, long scan_bound = -1);

struct CrossChecks {
    long class_count = 0;
    long w_max_degree = 1;
    long deg_p = 0;
    bool degree_formula_ok = false;
    double clustering_margin = 0.0;
    long d_a = 1;
    long d_b = 1;
    bool single_moments_vanish_to_bound = false;
    bool certificate_exists = false;
    bool regular_endpoint_contradiction = false;  // red flag; must never happen
};

/// Branch-count consistency against the maximal common right divisor plus
/// the regular-endpoint reduction check.
CrossChecks cross_validate(const ProblemInstance& inst, const MonodromyOptions& opt = {});

}  // namespace pmp

#endif
