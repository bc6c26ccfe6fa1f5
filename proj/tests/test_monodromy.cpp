#include <doctest.h>

#include <cmath>
#include <complex>

#include "pmp/corpus.hpp"
#include "pmp/monodromy.hpp"
#include "pmp/puiseux.hpp"

using namespace pmp;
using Cxd = std::complex<double>;

namespace {

const FieldPtr QF = NumberField::rationals();

std::vector<Cxd> ccircle(Cxd center, double radius, int segments = 64) {
    std::vector<Cxd> pts;
    for (int k = 0; k <= segments; ++k) {
        double th = 2.0 * M_PI * k / segments;
        pts.push_back(center + radius * Cxd(std::cos(th), std::sin(th)));
    }
    pts.back() = pts.front();
    return pts;
}

ProblemInstance chebyshev_instance() {
    auto field = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
    FieldElement half = FieldElement::from_rational(field, Rational(1, 2));
    FieldElement a = -FieldElement::generator(field) * half;
    FieldElement b = FieldElement::generator(field) * half;
    return ProblemInstance::from_Q(field, chebyshev(6, field), chebyshev(2, field) + chebyshev(3, field),
                                   a, b, "chebyshev-t2-plus-t3");
}

}  // namespace

TEST_CASE("tracking the square root around and away from the branch point") {
    CPoly P = embed_poly(fpoly_from_int_coeffs(QF, {0, 0, 1}));
    std::vector<Cxd> fiber{Cxd(1.0, 0.0), Cxd(-1.0, 0.0)};  // roots over t = 1
    Permutation swap_perm = loop_permutation(P, ccircle(Cxd(0.0), 1.0), fiber);
    CHECK(swap_perm.cycle_string() == "(0 1)");

    std::vector<Cxd> fiber5{Cxd(std::sqrt(5.0), 0.0), Cxd(-std::sqrt(5.0), 0.0)};
    Permutation id_perm = loop_permutation(P, ccircle(Cxd(5.0), 1.0), fiber5);
    CHECK(id_perm.is_identity());
}

TEST_CASE("small loop at a simple critical value is a transposition") {
    FPoly Pf = fpoly_from_int_coeffs(QF, {0, -3, 0, 1});
    CPoly P = embed_poly(Pf);
    // fiber over 2 + 0.25: roots of z^3 - 3z - 2.25
    auto fiber = aberth_roots(P - CPoly::constant(Cxd(2.25, 0.0)));
    Permutation p = loop_permutation(P, ccircle(Cxd(2.0, 0.0), 0.25), fiber);
    auto cycles = p.cycles(false);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].size() == 2);
}

TEST_CASE("monodromy of plain powers") {
    auto mono = monodromy_group(fpoly_from_int_coeffs(QF, {0, 0, 0, 0, 1}));
    REQUIRE(mono.loop_generators.size() == 1);
    CHECK(mono.loop_generators[0].perm.is_ncycle());
    CHECK(mono.infinity_perm.is_ncycle());
    CHECK(mono.props.transitive);
    CHECK_FALSE(mono.props.primitive);  // blocks of size 2 for n = 4
    CHECK(mono.group_order == 4);
    REQUIRE(mono.block_systems.size() == 1);
    CHECK(mono.block_systems[0][0].size() == 2);

    auto mono5 = monodromy_group(fpoly_from_int_coeffs(QF, {0, 0, 0, 0, 0, 1}));
    CHECK(mono5.props.primitive);  // prime cyclic
    CHECK_FALSE(mono5.props.doubly_transitive);
    CHECK(mono5.group_order == 5);

    auto mono2 = monodromy_group(fpoly_from_int_coeffs(QF, {0, 0, 1}));
    CHECK(mono2.props.doubly_transitive);
}

TEST_CASE("monodromy of the hill cubic is the full symmetric group") {
    auto mono = monodromy_group(fpoly_from_int_coeffs(QF, {0, -3, 0, 1}));
    CHECK(mono.group_order == 6);
    CHECK(mono.props.transitive);
    CHECK(mono.props.primitive);
    CHECK(mono.props.doubly_transitive);
    REQUIRE(mono.loop_generators.size() == 2);
    for (const auto& g : mono.loop_generators) {
        auto cycles = g.perm.cycles(false);
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].size() == 2);
    }
}

TEST_CASE("indecomposable composite degree gives a doubly transitive group") {
    auto mono = monodromy_group(fpoly_from_int_coeffs(QF, {0, 1, 0, 0, 1}));
    CHECK(mono.props.doubly_transitive);
    CHECK(mono.props.primitive);
    CHECK(mono.infinity_perm.is_ncycle());
}

TEST_CASE("chebyshev monodromy is dihedral with both block systems") {
    auto field = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
    auto mono = monodromy_group(chebyshev(6, field));
    CHECK(mono.group_order == 12);
    CHECK(mono.props.transitive);
    CHECK_FALSE(mono.props.primitive);
    CHECK_FALSE(mono.props.doubly_transitive);
    std::vector<std::size_t> sizes;
    for (const auto& sys : mono.block_systems) sizes.push_back(sys[0].size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 3});
}

TEST_CASE("omega labeling of the square") {
    auto inst = ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                        fpoly_from_int_coeffs(QF, {0, 1}), FieldElement(-1),
                                        FieldElement(1), "");
    auto mono = monodromy_group(inst.P);
    auto lab = omega_labeling(inst, mono);
    CHECK(lab.rho1.is_identity());
    CHECK(lab.rho2.cycle_string() == "(0 1)");
    CHECK(lab.k == 0);
    CHECK(lab.d_a == 1);
    CHECK(lab.d_b == 1);
}

TEST_CASE("omega labeling of the cube with root-of-unity endpoints") {
    auto field = NumberField::create(Poly<Rational>({Rational(1), Rational(1), Rational(1)}), 1);
    auto inst = ProblemInstance::from_q(field, fpoly_from_int_coeffs(field, {0, 0, 0, 1}),
                                        fpoly_from_int_coeffs(field, {0, 0, 1}),
                                        FieldElement::from_rational(field, Rational(1)),
                                        FieldElement::generator(field), "");
    auto mono = monodromy_group(inst.P);
    auto lab = omega_labeling(inst, mono);
    CHECK(lab.rho1.is_identity());
    CHECK(lab.rho2 == full_cycle(3));
    CHECK(lab.k == 0);
}

TEST_CASE("omega labeling of the chebyshev regression instance") {
    auto inst = chebyshev_instance();
    auto mono = monodromy_group(inst.P);
    auto lab = omega_labeling(inst, mono);
    CHECK(lab.d_a == 2);
    CHECK(lab.d_b == 2);
    CHECK(lab.rho1.cycle_string() == "(0 5)(1 4)(2 3)");
    CHECK(lab.rho2.cycle_string() == "(1 5)(2 4)");
    CHECK(lab.k == 1);
    CHECK(lab.rho1.then(lab.rho2) == full_cycle(6));
    // disk Euler count: cycles(rho1) + cycles(rho2) = n + 1
    CHECK(lab.rho1.cycles(true).size() + lab.rho2.cycles(true).size() == 7);
}

TEST_CASE("permutations are stable under tightened tracking") {
    MonodromyOptions tight;
    tight.track.newton_tol = 1e-14;
    tight.track.initial_step = 0.125;
    tight.circle_segments = 96;
    for (const std::vector<long>& cs :
         {std::vector<long>{0, -3, 0, 1}, std::vector<long>{0, 1, 0, 0, 1}, std::vector<long>{-1, 0, 18, 0, -48, 0, 32}}) {
        FPoly P = fpoly_from_int_coeffs(QF, cs);
        auto m1 = monodromy_group(P);
        auto m2 = monodromy_group(P, tight);
        CHECK(m1.infinity_perm == m2.infinity_perm);
        REQUIRE(m1.loop_generators.size() == m2.loop_generators.size());
        for (std::size_t i = 0; i < m1.loop_generators.size(); ++i)
            CHECK(m1.loop_generators[i].perm == m2.loop_generators[i].perm);
    }
}

TEST_CASE("branch equality classes") {
    auto mono2 = monodromy_group(fpoly_from_int_coeffs(QF, {0, 0, 1}));
    auto be2 = branch_equalities(fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                 fpoly_from_int_coeffs(QF, {0, 0, 1}), mono2);
    CHECK(be2.class_count == 1);

    auto mono4 = monodromy_group(fpoly_from_int_coeffs(QF, {0, 0, 0, 0, 1}));
    auto be4 = branch_equalities(fpoly_from_int_coeffs(QF, {0, 0, 0, 0, 1}),
                                 fpoly_from_int_coeffs(QF, {0, 0, 1}), mono4);
    CHECK(be4.class_count == 2);
    for (const auto& cls : be4.classes) CHECK(cls.size() == 2);
    CHECK(be4.margin >= 100.0);

    auto inst = chebyshev_instance();
    auto mono6 = monodromy_group(inst.P);
    auto be6 = branch_equalities(inst.P, inst.Q, mono6);
    CHECK(be6.class_count == 6);
    CHECK(be6.margin >= 100.0);
}

TEST_CASE("proof trace on the square instance") {
    auto inst = ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                        fpoly_from_int_coeffs(QF, {0, 1}), FieldElement(-1),
                                        FieldElement(1), "");
    auto mono = monodromy_group(inst.P);
    auto lab = omega_labeling(inst, mono);
    auto tr = proof_trace(inst, lab, 1);
    REQUIRE(tr.power_identities.size() == 1);
    CHECK(tr.power_identities[0].pass);
    CHECK(tr.vandermonde_dim == 2);
    CHECK(tr.vandermonde_singular);  // Q = z^2/2 takes equal values on both branches
    CHECK(tr.branch_equality_forced);
}

TEST_CASE("proof trace on certified instances passes every power") {
    for (std::uint64_t seed : {41u, 42u}) {
        auto inst = random_certified_instance(seed, false);
        auto mono = monodromy_group(inst.P);
        auto lab = omega_labeling(inst, mono);
        auto tr = proof_trace(inst, lab, 3);
        for (const auto& chk : tr.power_identities) CHECK(chk.pass);
    }
}

TEST_CASE("proof trace on the chebyshev regression fails at the witness power") {
    auto inst = chebyshev_instance();
    auto mono = monodromy_group(inst.P);
    auto lab = omega_labeling(inst, mono);
    auto tr = proof_trace(inst, lab, 3, MonodromyOptions{});
    REQUIRE(tr.power_identities.size() == 3);
    CHECK(tr.power_identities[0].pass);        // single moments vanish
    CHECK_FALSE(tr.power_identities[1].pass);  // m_{i,1} != 0 shows up at power 2
    CHECK_FALSE(tr.vandermonde_singular);      // all six branch values distinct
    CHECK_FALSE(tr.branch_equality_forced);
}

TEST_CASE("doubly transitive relation check") {
    // P = z^2, Q = z^2: the two branch values agree, coefficients (1, -1)
    FPoly P2 = fpoly_from_int_coeffs(QF, {0, 0, 1});
    auto mono2 = monodromy_group(P2);
    CHECK(lemma2_check(P2, P2, {FieldElement(1), FieldElement(-1)}, mono2));

    // P = z^3 - 3z, Q = P
    FPoly P3 = fpoly_from_int_coeffs(QF, {0, -3, 0, 1});
    auto mono3 = monodromy_group(P3);
    CHECK(lemma2_check(P3, P3, {FieldElement(1), FieldElement(-1), FieldElement(0)}, mono3));

    // P = z^4 + z, Q = P^2
    FPoly P4 = fpoly_from_int_coeffs(QF, {0, 1, 0, 0, 1});
    auto mono4 = monodromy_group(P4);
    CHECK(lemma2_check(P4, P4 * P4, {FieldElement(1), FieldElement(-1), FieldElement(0), FieldElement(0)},
                       mono4));

    // failing numeric relation is rejected
    CHECK_THROWS_AS(lemma2_check(P4, P4 * P4 + fpoly_from_int_coeffs(QF, {0, 1}),
                                 {FieldElement(1), FieldElement(-1), FieldElement(0), FieldElement(0)}, mono4),
                    PreconditionUnverified);
}

TEST_CASE("puiseux expansion of plain powers and the binomial series") {
    auto s = puiseux_at_infinity(fpoly_from_int_coeffs(QF, {0, 0, 0, 1}), fpoly_from_int_coeffs(QF, {0, 1}), 5);
    CHECK(s.ramification == 3);
    CHECK(std::abs(s.coefficient(1) - Cxd(1.0, 0.0)) < 1e-14);
    for (long k : {0L, -1L, -2L, -3L}) CHECK(std::abs(s.coefficient(k)) < 1e-14);

    // P = z^2 + 1, Q = z: the binomial series of (t-1)^(1/2)
    auto b = puiseux_at_infinity(fpoly_from_int_coeffs(QF, {1, 0, 1}), fpoly_from_int_coeffs(QF, {0, 1}), 10);
    // oracle: binomial(1/2, m) * (-1)^m at exponents 1 - 2m
    double coeff = 1.0;
    for (long m = 0; m <= 4; ++m) {
        if (m > 0) coeff *= (0.5 - (m - 1)) / m * -1.0;
        CHECK(std::abs(b.coefficient(1 - 2 * m) - Cxd(coeff, 0.0)) < 1e-12 * std::max(1.0, std::abs(coeff)));
        if (1 - 2 * m - 1 >= 1 - 10) CHECK(std::abs(b.coefficient(-2 * m)) < 1e-14);
    }

    // branch shift law reproduces the second branch of the square root
    auto b1 = b.branch(1);
    for (const auto& [k, v] : b1) {
        double sign = (((k % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(v - sign * b.coefficient(k)) < 1e-12);
    }
}
