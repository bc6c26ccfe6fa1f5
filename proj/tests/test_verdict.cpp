#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pmp/corpus.hpp"
#include "pmp/errors.hpp"
#include "pmp/json_io.hpp"
#include "pmp/verdict.hpp"

using namespace pmp;

namespace {

const FieldPtr QF = NumberField::rationals();

ProblemInstance chebyshev_instance() {
    auto field = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
    FieldElement half = FieldElement::from_rational(field, Rational(1, 2));
    FieldElement a = -FieldElement::generator(field) * half;
    FieldElement b = FieldElement::generator(field) * half;
    return ProblemInstance::from_Q(field, chebyshev(6, field), chebyshev(2, field) + chebyshev(3, field),
                                   a, b, "chebyshev-t2-plus-t3");
}

}  // namespace

TEST_CASE("theorem 1 verdicts on the square family") {
    auto vanish = ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                          fpoly_from_int_coeffs(QF, {0, 0, 0, 1}), FieldElement(-1),
                                          FieldElement(1), "");
    auto v1 = theorem1_verdict(vanish);
    CHECK(v1.kind == VerdictKind::VanishesByTheorem1);
    REQUIRE(v1.certificate.has_value());
    CHECK(v1.certificate->W == vanish.P);

    auto nonvanish = ProblemInstance::from_q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                             fpoly_from_int_coeffs(QF, {0, 0, 1}), FieldElement(-1),
                                             FieldElement(1), "");
    auto v2 = theorem1_verdict(nonvanish);
    CHECK(v2.kind == VerdictKind::DoesNotVanish);
    REQUIRE(v2.witness.has_value());
    CHECK(v2.witness->i == 0);
    CHECK(v2.witness->value.as_rational() == Rational(2, 3));
}

TEST_CASE("theorem 1 on an indecomposable quartic finds an early witness") {
    FPoly P = fpoly_from_int_coeffs(QF, {0, 1, 0, 0, 1});
    FPoly q = (P * P).derivative() + fpoly_from_int_coeffs(QF, {0, 1});
    auto inst = ProblemInstance::from_q(QF, P, q, FieldElement(0), FieldElement(-1), "");
    auto v = theorem1_verdict(inst);
    CHECK(v.kind == VerdictKind::DoesNotVanish);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->i <= 2);
}

TEST_CASE("theorem 1 refuses decomposable input") {
    auto inst = ProblemInstance::from_Q(QF, fpoly_from_int_coeffs(QF, {0, 0, 0, 0, 1}),
                                        fpoly_from_int_coeffs(QF, {0, 0, 1}), FieldElement(-1),
                                        FieldElement(1), "");
    CHECK_THROWS_AS(theorem1_verdict(inst), NotIndecomposable);
}

TEST_CASE("theorem 2 verdicts around the chebyshev family") {
    auto field = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
    FieldElement half = FieldElement::from_rational(field, Rational(1, 2));
    FieldElement a = -FieldElement::generator(field) * half;
    FieldElement b = FieldElement::generator(field) * half;
    FPoly T6 = chebyshev(6, field);

    auto with_t2 = ProblemInstance::from_Q(field, T6, chebyshev(2, field), a, b, "");
    auto v1 = theorem2_verdict(with_t2);
    CHECK(v1.kind == VerdictKind::VanishesWithCertificate);
    REQUIRE(v1.certificate.has_value());
    CHECK(v1.certificate->W == fpoly_from_int_coeffs(field, {0, 0, 1}));
    CHECK(v1.certificate->W(a) == FieldElement::from_rational(field, Rational(3, 4)));

    auto v2 = theorem2_verdict(chebyshev_instance());
    CHECK(v2.kind == VerdictKind::DoesNotVanish);
    CHECK(v2.mult.d_a == 2);
    CHECK(v2.mult.d_b == 2);
    REQUIRE(v2.witness.has_value());
    CHECK(v2.witness->i == 1);
    CHECK(v2.witness->j == 1);
    CHECK(v2.witness->value.to_string() == "(-432/385)t");

    auto square = ProblemInstance::from_Q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                          fpoly_from_int_coeffs(QF, {0, 0, 1}), FieldElement(-1),
                                          FieldElement(1), "");
    CHECK(theorem2_verdict(square).kind == VerdictKind::VanishesWithCertificate);
}

TEST_CASE("theorem 2 witness for the endpoint-breaking gauss pair") {
    auto gauss = NumberField::create(Poly<Rational>({Rational(1), Rational(0), Rational(1)}), 1);
    auto inst = ProblemInstance::from_Q(gauss, fpoly_from_int_coeffs(gauss, {0, 0, 0, 0, 1}),
                                        fpoly_from_int_coeffs(gauss, {0, 0, 1}),
                                        FieldElement::from_rational(gauss, Rational(1)),
                                        FieldElement::generator(gauss), "");
    auto v = theorem2_verdict(inst);
    CHECK(v.kind == VerdictKind::DoesNotVanish);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->i == 0);
    CHECK(v.witness->j == 0);
}

TEST_CASE("cross validation closes the degree formula") {
    auto quartic = ProblemInstance::from_Q(QF, fpoly_from_int_coeffs(QF, {0, 0, 0, 0, 1}),
                                           fpoly_from_int_coeffs(QF, {0, 0, 1}), FieldElement(-1),
                                           FieldElement(1), "");
    auto cc1 = cross_validate(quartic);
    CHECK(cc1.class_count == 2);
    CHECK(cc1.w_max_degree == 2);
    CHECK(cc1.degree_formula_ok);
    CHECK_FALSE(cc1.regular_endpoint_contradiction);

    auto cc2 = cross_validate(chebyshev_instance());
    CHECK(cc2.class_count == 6);
    CHECK(cc2.w_max_degree == 1);
    CHECK(cc2.degree_formula_ok);
    CHECK_FALSE(cc2.regular_endpoint_contradiction);

    auto square = ProblemInstance::from_Q(QF, fpoly_from_int_coeffs(QF, {0, 0, 1}),
                                          fpoly_from_int_coeffs(QF, {0, 0, 1}), FieldElement(-1),
                                          FieldElement(1), "");
    auto cc3 = cross_validate(square);
    CHECK(cc3.class_count == 1);
    CHECK(cc3.w_max_degree == 2);
    CHECK(cc3.degree_formula_ok);
}

TEST_CASE("every bundled instance gets a definitive verdict") {
    for (const auto& inst : bundled_corpus()) {
        auto v = decide(inst);
        CAPTURE(inst.name);
        CHECK(v.definitive());
    }
}

TEST_CASE("problem json round trip") {
    auto inst = chebyshev_instance();
    Json j = problem_to_json(inst);
    j.erase("q");
    auto back = parse_problem(j);
    CHECK(back.P == inst.P);
    CHECK(back.Q == inst.Q);
    CHECK(back.a == inst.a);
    CHECK(back.b == inst.b);
    CHECK(back.t0 == inst.t0);

    // and through q instead of Q
    Json j2 = problem_to_json(inst);
    j2.erase("Q");
    auto back2 = parse_problem(j2);
    CHECK(back2.q == inst.q);
}

TEST_CASE("problem json validation errors") {
    CHECK_THROWS_AS(parse_problem(Json::parse(R"({"P": [0,0,1]})")), ParseError);
    CHECK_THROWS_AS(parse_problem(Json::parse(R"({"P": [0,0,1], "q": [1], "Q": [0,1], "a": "-1", "b": "1"})")),
                    ParseError);
    CHECK_THROWS_AS(parse_problem(Json::parse(R"({"P": [0,0,1], "q": [1], "a": "zz", "b": "1"})")),
                    ParseError);
}

TEST_CASE("verdict report re-verifies witnesses and serializes") {
    auto inst = chebyshev_instance();
    auto v = theorem2_verdict(inst);
    Json rep = verdict_to_json(inst, v);
    CHECK(rep["kind"] == "DoesNotVanish");
    CHECK(rep["witness"]["i"] == 1);
    CHECK(rep["witness"]["j"] == 1);
    CHECK(rep["witness"]["value"] == "(-432/385)t");
    CHECK(rep["definitive"] == true);
}

TEST_CASE("corpus export and reload agree") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pmp-corpus-test";
    fs::create_directories(dir);
    for (const auto& inst : bundled_corpus()) {
        Json j = problem_to_json(inst);
        j.erase("q");
        write_json_file((dir / (inst.name + ".json")).string(), j);
        auto back = load_problem_file((dir / (inst.name + ".json")).string());
        CHECK(back.P == inst.P);
        CHECK(back.Q == inst.Q);
    }
    fs::remove_all(dir);
}
