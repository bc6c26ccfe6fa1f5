#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pmp/corpus.hpp"
#include "pmp/moments.hpp"

using namespace pmp;
using Cxd = std::complex<double>;

namespace {

const FieldPtr QF = NumberField::rationals();

// Independent quadrature oracle: Gauss-Legendre along the straight segment
// from a to b, exact for polynomial integrands up to degree 2*nodes - 1.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n) {
        for (int i = 0; i < n; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                double dx = p1 / dp;
                xi -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            x.push_back(xi);
            w.push_back(2.0 / ((1.0 - xi * xi) * dp * dp));
        }
    }
    Cxd integrate(const CPoly& p, Cxd a, Cxd b) const {
        Cxd mid = 0.5 * (a + b), half = 0.5 * (b - a);
        Cxd acc(0.0);
        for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * p(mid + half * x[i]);
        return acc * half;
    }
};

ProblemInstance chebyshev_instance() {
    auto field = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
    FieldElement half = FieldElement::from_rational(field, Rational(1, 2));
    FieldElement a = -FieldElement::generator(field) * half;
    FieldElement b = FieldElement::generator(field) * half;
    return ProblemInstance::from_Q(field, chebyshev(6, field), chebyshev(2, field) + chebyshev(3, field),
                                   a, b, "chebyshev-t2-plus-t3");
}

}  // namespace

TEST_CASE("plain integrals") {
    Integrator integ(FieldElement(0), FieldElement(1));
    CHECK(integ.integrate(fpoly_from_int_coeffs(QF, {0, 1})).as_rational() == Rational(1, 2));
    CHECK(integ.integrate(fpoly_from_int_coeffs(QF, {0, 0, 1})).as_rational() == Rational(1, 3));
}

TEST_CASE("odd integrand over a symmetric interval vanishes for all i") {
    auto inst = ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                        fpoly_from_int_coeffs(QF, {0, 1}), FieldElement(-1),
                                        FieldElement(1), "sq-z");
    for (const auto& m : single_moments(inst, 12)) CHECK(m.is_zero());
}

TEST_CASE("chebyshev instance vanishes singly but not doubly") {
    auto inst = chebyshev_instance();
    CHECK(inst.t0 == FieldElement(-1));
    for (const auto& m : single_moments(inst, 30)) CHECK(m.is_zero());

    // Pinned first nonzero double moment of the scan (i outer, j inner).
    FieldElement m11 = double_moment(inst, 1, 1);
    CHECK_FALSE(m11.is_zero());
    CHECK(m11.to_string() == "(-432/385)t");
    CHECK(double_moment(inst, 0, 1).is_zero());
    CHECK(double_moment(inst, 0, 2).is_zero());
    CHECK(double_moment(inst, 1, 0).is_zero());

    // Independent quadrature confirmation of the witness value.
    GaussLegendre gl(40);
    CPoly integrand = embed_poly(inst.P * inst.Q * inst.q);
    Cxd approx = gl.integrate(integrand, inst.a.embed(), inst.b.embed());
    Cxd exact = m11.embed();
    CHECK(std::abs(approx - exact) < 1e-10 * std::max(1.0, std::abs(exact)));
}

TEST_CASE("double moment shortcuts") {
    auto inst = chebyshev_instance();
    for (long i = 0; i <= 6; ++i) CHECK(double_moment(inst, i, 0) == single_moment(inst, i));
    for (long j = 1; j <= 4; ++j) {
        FieldElement lhs = double_moment(inst, 0, j);
        FieldElement qb = inst.Q(inst.b).pow(static_cast<unsigned long>(j + 1));
        FieldElement qa = inst.Q(inst.a).pow(static_cast<unsigned long>(j + 1));
        CHECK(lhs == (qb - qa) / ring_from_int(inst.a, j + 1));
    }
}

TEST_CASE("moment linearity in q") {
    Rng rng(301);
    auto P = fpoly_from_int_coeffs(QF, {0, -3, 0, 1});
    FieldElement a(1), b(-2);
    for (int iter = 0; iter < 10; ++iter) {
        FPoly q1 = random_dense_poly(rng, rng.range(0, 4), QF);
        FPoly q2 = random_dense_poly(rng, rng.range(0, 4), QF);
        FieldElement c1(rng.range(-3, 3)), c2(rng.range(-3, 3));
        auto i1 = ProblemInstance::from_q(QF, P, q1, a, b, "");
        auto i2 = ProblemInstance::from_q(QF, P, q2, a, b, "");
        auto i3 = ProblemInstance::from_q(QF, P, q1 * c1 + q2 * c2, a, b, "");
        for (long i = 0; i <= 6; ++i)
            CHECK(single_moment(i3, i) == c1 * single_moment(i1, i) + c2 * single_moment(i2, i));
    }
}

TEST_CASE("sufficiency of the composition construction") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        auto inst = random_certified_instance(seed, seed % 2 == 0);
        auto rep = moment_report(inst, 12, 4);
        CHECK(rep.all_zero_single);
        CHECK(rep.all_zero_double);
    }
}

TEST_CASE("kernel of the square map on degree-3 space") {
    FPoly P = fpoly_from_int_coeffs(QF, {0, 0, 1});
    auto k = moment_kernel(P, FieldElement(-1), FieldElement(1), 3);
    CHECK(k.stabilized);
    REQUIRE(k.basis.size() == 2);
    CHECK(k.basis[0] == fpoly_from_int_coeffs(QF, {0, 1}));
    CHECK(k.basis[1] == fpoly_from_int_coeffs(QF, {0, 0, 0, 1}));

    auto k0 = moment_kernel(P, FieldElement(-1), FieldElement(1), 0);
    CHECK(k0.basis.empty());
}

TEST_CASE("kernel for the cubic over the cube-root field") {
    auto field = NumberField::create(Poly<Rational>({Rational(1), Rational(1), Rational(1)}), 1);
    FPoly P = fpoly_from_int_coeffs(field, {0, 0, 0, 1});
    FieldElement a = FieldElement::from_rational(field, Rational(1));
    FieldElement b = FieldElement::generator(field);
    auto k = moment_kernel(P, a, b, 5);
    CHECK(k.stabilized);
    // The kernel is exactly the q whose antiderivative is a polynomial in
    // z^3: both z^2 and z^5 qualify below the degree bound.
    REQUIRE(k.basis.size() == 2);
    CHECK(k.basis[0] == fpoly_from_int_coeffs(field, {0, 0, 1}));
    CHECK(k.basis[1] == fpoly_from_int_coeffs(field, {0, 0, 0, 0, 0, 1}));
}

TEST_CASE("kernel members keep vanishing far beyond the stabilization bound") {
    FPoly P = fpoly_from_int_coeffs(QF, {0, -3, 0, 1});
    FieldElement a(Rational(-2, 7)), b(Rational(-11, 7));
    auto k = moment_kernel(P, a, b, 7);
    CHECK(k.stabilized);
    CHECK(!k.basis.empty());
    for (const auto& q : k.basis) {
        auto inst = ProblemInstance::from_q(QF, P, q, a, b, "");
        for (const auto& m : single_moments(inst, k.moment_bound + 50)) CHECK(m.is_zero());
    }
}

TEST_CASE("boundary expansion identity, raw data") {
    // P = z, Q = z^2 on [0,1]: (i+1) * int Q P' P^i = [Q P^(i+1)] - m_(i+1)
    Integrator integ(FieldElement(0), FieldElement(1));
    FieldElement lhs = integ.integrate(fpoly_from_int_coeffs(QF, {0, 0, 1}));  // i = 0
    FieldElement boundary(1);
    FieldElement m1 = integ.integrate(fpoly_from_int_coeffs(QF, {0, 0, 2}));  // q P = 2z * z
    CHECK(lhs == boundary - m1);
    CHECK(lhs.as_rational() == Rational(1, 3));
}

TEST_CASE("cauchy expansion identity holds exactly") {
    CHECK(cauchy_expansion_check(chebyshev_instance(), 15));
    for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
        CHECK(cauchy_expansion_check(random_plain_instance(seed), 10));
        CHECK(cauchy_expansion_check(random_certified_instance(seed, false), 10));
    }
    auto inst = ProblemInstance::from_Q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                        fpoly_from_int_coeffs(QF, {5}), FieldElement(-1),
                                        FieldElement(1), "");
    CHECK(cauchy_expansion_check(inst, 8));
}

TEST_CASE("instance construction rejects bad data") {
    CHECK_THROWS(ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                         fpoly_from_int_coeffs(QF, {1}), FieldElement(1),
                                         FieldElement(1), ""));
    CHECK_THROWS(ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                         fpoly_from_int_coeffs(QF, {1}), FieldElement(1),
                                         FieldElement(2), ""));
    CHECK_THROWS(ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 1}),
                                         fpoly_from_int_coeffs(QF, {1}), FieldElement(1),
                                         FieldElement(2), ""));
}
