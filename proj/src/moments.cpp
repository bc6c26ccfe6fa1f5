#include "pmp/moments.hpp"

#include "pmp/errors.hpp"
#include "pmp/linalg.hpp"

namespace pmp {

ProblemInstance ProblemInstance::from_q(FieldPtr field, FPoly P, FPoly q, FieldElement a, FieldElement b,
                                        std::string name) {
    ProblemInstance inst;
    inst.field = std::move(field);
    inst.P = std::move(P);
    inst.q = std::move(q);
    inst.Q = inst.q.antiderivative();
    inst.a = std::move(a);
    inst.b = std::move(b);
    inst.name = std::move(name);
    if (inst.P.degree() < 2) throw InvalidInput("P must have degree >= 2");
    if (inst.a == inst.b) throw InvalidInput("endpoints must be distinct");
    inst.t0 = inst.P(inst.a);
    if (!(inst.t0 == inst.P(inst.b))) throw InvalidInput("P(a) != P(b)");
    return inst;
}

ProblemInstance ProblemInstance::from_Q(FieldPtr field, FPoly P, FPoly Q, FieldElement a, FieldElement b,
                                        std::string name) {
    ProblemInstance inst;
    inst.field = std::move(field);
    inst.P = std::move(P);
    inst.Q = std::move(Q);
    inst.q = inst.Q.derivative();
    inst.a = std::move(a);
    inst.b = std::move(b);
    inst.name = std::move(name);
    if (inst.P.degree() < 2) throw InvalidInput("P must have degree >= 2");
    if (inst.a == inst.b) throw InvalidInput("endpoints must be distinct");
    inst.t0 = inst.P(inst.a);
    if (!(inst.t0 == inst.P(inst.b))) throw InvalidInput("P(a) != P(b)");
    return inst;
}

Integrator::Integrator(FieldElement a, FieldElement b)
    : a_(std::move(a)), b_(std::move(b)), apow_(a_), bpow_(b_) {
    weights_.push_back(b_ - a_);  // (b^1 - a^1)/1
}

void Integrator::ensure(std::size_t k) {
    while (weights_.size() <= k) {
        apow_ = apow_ * a_;
        bpow_ = bpow_ * b_;
        auto next = static_cast<long>(weights_.size()) + 1;
        weights_.push_back((bpow_ - apow_) / ring_from_int(a_, next));
    }
}

FieldElement Integrator::integrate(const FPoly& p) {
    FieldElement acc = ring_zero(a_);
    if (p.is_zero()) return acc;
    ensure(p.coeffs().size() - 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc = acc + p.coeffs()[k] * weights_[k];
    return acc;
}

FieldElement single_moment(const ProblemInstance& inst, long i) {
    Integrator integ(inst.a, inst.b);
    return integ.integrate(inst.P.pow(static_cast<unsigned long>(i)) * inst.q);
}

FieldElement double_moment(const ProblemInstance& inst, long i, long j) {
    Integrator integ(inst.a, inst.b);
    return integ.integrate(inst.P.pow(static_cast<unsigned long>(i)) *
                           inst.Q.pow(static_cast<unsigned long>(j)) * inst.q);
}

std::vector<FieldElement> single_moments(const ProblemInstance& inst, long max_i) {
    Integrator integ(inst.a, inst.b);
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(max_i) + 1);
    FPoly integrand = inst.q;
    for (long i = 0; i <= max_i; ++i) {
        out.push_back(integ.integrate(integrand));
        if (i < max_i) integrand = integrand * inst.P;
    }
    return out;
}

MomentReport moment_report(const ProblemInstance& inst, long max_i, long max_j) {
    MomentReport rep;
    rep.max_i = max_i;
    rep.max_j = max_j;
    Integrator integ(inst.a, inst.b);

    FPoly integrand = inst.q;
    for (long i = 0; i <= max_i; ++i) {
        FieldElement v = integ.integrate(integrand);
        if (!v.is_zero()) rep.all_zero_single = false;
        rep.single_moments.push_back({i, 0, v});
        if (i < max_i) integrand = integrand * inst.P;
    }

    // grid in j-major strips so each strip reuses one running P-power
    std::vector<std::vector<FieldElement>> grid(static_cast<std::size_t>(max_i) + 1);
    FPoly qpow = inst.q;  // Q^j * Q'
    for (long j = 0; j <= max_j; ++j) {
        FPoly v = qpow;
        for (long i = 0; i <= max_i; ++i) {
            grid[static_cast<std::size_t>(i)].push_back(integ.integrate(v));
            if (i < max_i) v = v * inst.P;
        }
        if (j < max_j) qpow = qpow * inst.Q;
    }
    for (long i = 0; i <= max_i; ++i)
        for (long j = 0; j <= max_j; ++j) {
            const FieldElement& v = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!v.is_zero()) rep.all_zero_double = false;
            rep.double_moments.push_back({i, j, v});
        }
    return rep;
}

namespace {

// Moment matrix rows i = 0..N over monomial columns k = 0..D:
// row[i][k] = int_a^b P^i z^k dz, assembled from the running power of P.
std::vector<std::vector<FieldElement>> moment_matrix(const FPoly& P, Integrator& integ, long N, long D) {
    std::vector<std::vector<FieldElement>> m;
    m.reserve(static_cast<std::size_t>(N) + 1);
    FPoly ppow = FPoly::constant(ring_from_int(P.leading(), 1));
    for (long i = 0; i <= N; ++i) {
        std::vector<FieldElement> row;
        row.reserve(static_cast<std::size_t>(D) + 1);
        for (long k = 0; k <= D; ++k) {
            FPoly shifted;
            {
                // z^k * ppow without building a monomial each time
                std::vector<FieldElement> cs(static_cast<std::size_t>(k), ring_zero(P.leading()));
                cs.insert(cs.end(), ppow.coeffs().begin(), ppow.coeffs().end());
                shifted = FPoly(std::move(cs));
            }
            row.push_back(integ.integrate(shifted));
        }
        m.push_back(std::move(row));
        if (i < N) ppow = ppow * P;
    }
    return m;
}

}  // namespace

MomentKernel moment_kernel(const FPoly& P, const FieldElement& a, const FieldElement& b,
                           long degree_bound) {
    if (a == b) throw InvalidInput("endpoints must be distinct");
    if (!(P(a) == P(b))) throw InvalidInput("P(a) != P(b)");

    MomentKernel k;
    k.P = P;
    k.a = a;
    k.b = b;
    k.degree_bound = degree_bound;

    const long n = P.degree();
    const long cap = (degree_bound + 2) * n;
    const FieldElement one = ring_from_int(a, 1);

    Integrator integ(a, b);
    long N = 2 * n;
    long prev_dim = -1;
    int stable = 0;
    std::vector<std::vector<FieldElement>> basis_vecs;
    while (true) {
        auto m = moment_matrix(P, integ, N, degree_bound);
        basis_vecs = kernel_basis(std::move(m), one);
        long dim = static_cast<long>(basis_vecs.size());
        if (dim == prev_dim)
            ++stable;
        else
            stable = 0;
        prev_dim = dim;
        if (stable >= 2) {
            k.stabilized = true;
            break;
        }
        if (N + n > cap) {
            k.stabilized = false;
            break;
        }
        N += n;
    }
    k.moment_bound = N;
    for (auto& v : basis_vecs) k.basis.emplace_back(std::move(v));
    return k;
}

bool cauchy_expansion_check(const ProblemInstance& inst, long max_i) {
    if (max_i < 1) throw InvalidInput("max_i must be >= 1");
    Integrator integ(inst.a, inst.b);
    const FPoly dP = inst.P.derivative();
    const FieldElement Qa = inst.Q(inst.a), Qb = inst.Q(inst.b);

    FPoly lhs_integrand = inst.Q * dP;         // Q P' P^i
    FPoly moment_integrand = inst.q * inst.P;  // q P^(i+1)
    FieldElement t0pow = inst.t0;              // t0^(i+1)
    for (long i = 0; i < max_i; ++i) {
        FieldElement lhs = integ.integrate(lhs_integrand) * ring_from_int(inst.a, i + 1);
        FieldElement boundary = t0pow * (Qb - Qa);
        FieldElement rhs = boundary - integ.integrate(moment_integrand);
        if (!(lhs == rhs)) return false;
        if (i + 1 < max_i) {
            lhs_integrand = lhs_integrand * inst.P;
            moment_integrand = moment_integrand * inst.P;
            t0pow = t0pow * inst.t0;
        }
    }
    return true;
}

}  // namespace pmp
