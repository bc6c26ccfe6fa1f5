#include "pmp/verdict.hpp"

#include "pmp/errors.hpp"

namespace pmp {

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::VanishesWithCertificate: return "VanishesWithCertificate";
        case VerdictKind::VanishesByTheorem1: return "VanishesByTheorem1";
        case VerdictKind::DoesNotVanish: return "DoesNotVanish";
        case VerdictKind::Theorem1NonVanishing: return "Theorem1NonVanishing";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

long default_scan_bound(const ProblemInstance& inst) {
    return 4 * inst.P.degree() * (inst.Q.degree() + 1);
}

Verdict theorem1_verdict(const ProblemInstance& inst, long scan_bound) {
    if (!is_indecomposable(inst.P)) throw NotIndecomposable("P has a proper right factor");
    if (scan_bound < 0) scan_bound = default_scan_bound(inst);

    Verdict v;
    v.theorem = 1;
    v.scan_bound = scan_bound;
    v.mult = multiplicities(inst.P, inst.a, inst.b);

    // Q = outer(P) settles it: W = P and W(a) = W(b) holds by assumption.
    auto expansion = wadic_expand(inst.Q, inst.P);
    if (expansion.all_digits_constant()) {
        v.kind = VerdictKind::VanishesByTheorem1;
        CompositionCertificate cert;
        cert.W = inst.P;
        cert.outer_p = FPoly({ring_zero(inst.a), ring_from_int(inst.a, 1)});
        cert.outer_q = expansion.outer();
        cert.endpoint_equal = true;
        v.certificate = cert;
        return v;
    }

    Integrator integ(inst.a, inst.b);
    FPoly integrand = inst.q;
    for (long i = 0; i <= scan_bound; ++i) {
        FieldElement m = integ.integrate(integrand);
        if (!m.is_zero()) {
            v.kind = VerdictKind::DoesNotVanish;
            v.witness = Witness{i, -1, m};
            return v;
        }
        if (i < scan_bound) integrand = integrand * inst.P;
    }
    v.kind = VerdictKind::Theorem1NonVanishing;
    v.note = "no exact composition through P exists, so a nonzero moment is guaranteed; "
             "the scan up to the bound did not reach it";
    return v;
}

Verdict theorem2_verdict(const ProblemInstance& inst, long scan_bound) {
    if (scan_bound < 0) scan_bound = default_scan_bound(inst);

    Verdict v;
    v.theorem = 2;
    v.scan_bound = scan_bound;
    v.mult = multiplicities(inst.P, inst.a, inst.b);

    if (auto cert = composition_condition(inst)) {
        v.kind = VerdictKind::VanishesWithCertificate;
        v.certificate = std::move(*cert);
        return v;
    }

    const long max_j = v.mult.d_a + v.mult.d_b - 2;
    Integrator integ(inst.a, inst.b);

    // Power lists reused across the scan: Q^j * q for each j.
    std::vector<FPoly> strips;
    FPoly qpow = inst.q;
    for (long j = 0; j <= max_j; ++j) {
        strips.push_back(qpow);
        if (j < max_j) qpow = qpow * inst.Q;
    }
    for (long i = 0; i <= scan_bound; ++i) {
        for (long j = 0; j <= max_j; ++j) {
            FieldElement m = integ.integrate(strips[static_cast<std::size_t>(j)]);
            if (!m.is_zero()) {
                v.kind = VerdictKind::DoesNotVanish;
                v.witness = Witness{i, j, m};
                return v;
            }
            if (i < scan_bound) strips[static_cast<std::size_t>(j)] = strips[static_cast<std::size_t>(j)] * inst.P;
        }
    }
    v.kind = VerdictKind::Inconclusive;
    v.note = "no composition certificate, yet every scanned double moment vanishes; "
             "a nonzero one exists beyond the scan bound";
    return v;
}

Verdict decide(const ProblemInstance& inst, long scan_bound) {
    if (is_indecomposable(inst.P)) return theorem1_verdict(inst, scan_bound);
    return theorem2_verdict(inst, scan_bound);
}

CrossChecks cross_validate(const ProblemInstance& inst, const MonodromyOptions& opt) {
    CrossChecks cc;
    cc.deg_p = inst.P.degree();
    auto mult = multiplicities(inst.P, inst.a, inst.b);
    cc.d_a = mult.d_a;
    cc.d_b = mult.d_b;

    auto mono = monodromy_group(inst.P, opt);
    auto classes = branch_equalities(inst.P, inst.Q, mono, opt);
    cc.class_count = classes.class_count;
    cc.clustering_margin = classes.margin;

    if (auto crd = common_right_divisor(inst.P, inst.Q)) cc.w_max_degree = std::get<0>(*crd).degree();
    cc.degree_formula_ok = cc.class_count * cc.w_max_degree == cc.deg_p;

    const long bound = default_scan_bound(inst);
    cc.single_moments_vanish_to_bound = true;
    Integrator integ(inst.a, inst.b);
    FPoly integrand = inst.q;
    for (long i = 0; i <= bound; ++i) {
        if (!integ.integrate(integrand).is_zero()) {
            cc.single_moments_vanish_to_bound = false;
            break;
        }
        if (i < bound) integrand = integrand * inst.P;
    }
    cc.certificate_exists = composition_condition(inst).has_value();

    // Regular endpoints reduce the double-moment condition to the plain
    // moment condition, so vanishing scans without a certificate would
    // contradict the theorem.
    cc.regular_endpoint_contradiction = cc.d_a == 1 && cc.d_b == 1 &&
                                        cc.single_moments_vanish_to_bound && !cc.certificate_exists;
    return cc;
}

}  // namespace pmp
