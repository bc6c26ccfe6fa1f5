#include "pmp/decompose.hpp"

#include <algorithm>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

FPoly monic_normalization(const FPoly& P) { return P / P.leading(); }

std::vector<long> divisors_descending(long n) {
    std::vector<long> ds;
    for (long m = n; m >= 2; --m)
        if (n % m == 0) ds.push_back(m);
    return ds;
}

// Right-divisibility test under the fixed gauge: all base-W digits constant.
std::optional<FPoly> outer_through(const FPoly& p, const FPoly& w) {
    auto e = wadic_expand(p, w);
    if (!e.all_digits_constant()) return std::nullopt;
    return e.outer();
}

}  // namespace

FPoly right_factor_candidate(const FPoly& P, long m) {
    const long n = P.degree();
    if (n < 2 || m < 2 || n % m != 0) throw InvalidInput("bad right factor degree");
    FPoly pm = monic_normalization(P);
    if (m == n) {
        // shift the constant away to respect the W(0) = 0 gauge
        return pm - FPoly::constant(pm.coeff(0));
    }
    return series_rth_root(pm, static_cast<unsigned long>(n / m));
}

std::vector<std::pair<long, FPoly>> right_factors(const FPoly& P) {
    if (P.degree() < 2) throw InvalidInput("right factors need deg P >= 2");
    const long n = P.degree();
    std::vector<std::pair<long, FPoly>> out;
    for (long m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        FPoly w = right_factor_candidate(P, m);
        if (outer_through(P, w)) out.emplace_back(m, std::move(w));
    }
    return out;
}

bool is_indecomposable(const FPoly& P) {
    if (P.degree() < 2) throw InvalidInput("indecomposability needs deg P >= 2");
    // Prime degree admits no proper right factor at all.
    const long n = P.degree();
    for (long m = 2; m * m <= n; ++m)
        if (n % m == 0) return right_factors(P).empty();
    return true;
}

std::optional<std::tuple<FPoly, FPoly, FPoly>> common_right_divisor(const FPoly& P, const FPoly& Q) {
    if (P.degree() < 2) throw InvalidInput("common right divisor needs deg P >= 2");
    if (Q.degree() < 1) throw InvalidInput("common right divisor needs deg Q >= 1");
    for (long m : divisors_descending(P.degree())) {
        FPoly w = right_factor_candidate(P, m);
        auto outer_p = outer_through(P, w);
        if (!outer_p) continue;
        auto outer_q = outer_through(Q, w);
        if (!outer_q) continue;
        return std::make_tuple(std::move(w), std::move(*outer_p), std::move(*outer_q));
    }
    return std::nullopt;
}

std::optional<CompositionCertificate> composition_condition(const ProblemInstance& inst) {
    // The maximal common divisor may fail W(a) = W(b) while a smaller
    // degree succeeds, so every common factor degree is tried.
    for (long m : divisors_descending(inst.P.degree())) {
        FPoly w = right_factor_candidate(inst.P, m);
        auto outer_p = outer_through(inst.P, w);
        if (!outer_p) continue;
        auto outer_q = outer_through(inst.Q, w);
        if (!outer_q) continue;
        if (!(w(inst.a) == w(inst.b))) continue;
        CompositionCertificate cert;
        cert.W = std::move(w);
        cert.outer_p = std::move(*outer_p);
        cert.outer_q = std::move(*outer_q);
        cert.endpoint_equal = true;
        if (!(compose(cert.outer_p, cert.W) == inst.P) || !(compose(cert.outer_q, cert.W) == inst.Q))
            throw Error("certificate failed recomposition");
        return cert;
    }
    return std::nullopt;
}

long point_multiplicity(const FPoly& P, const FieldElement& c) {
    FPoly d = P;
    for (long j = 1; j <= P.degree(); ++j) {
        d = d.derivative();
        if (!d(c).is_zero()) return j;
    }
    throw Error("all derivatives vanished; P is constant");
}

MultiplicityData multiplicities(const FPoly& P, const FieldElement& a, const FieldElement& b) {
    return {point_multiplicity(P, a), point_multiplicity(P, b)};
}

}  // namespace pmp
