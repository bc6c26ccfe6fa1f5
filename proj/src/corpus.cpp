#include "pmp/corpus.hpp"

#include "pmp/errors.hpp"

namespace pmp {

FPoly chebyshev(long n, const FieldPtr& field) {
    FieldElement zero(field, Poly<Rational>());
    FieldElement one = ring_from_int(zero, 1);
    FieldElement two = ring_from_int(zero, 2);
    FPoly t0 = FPoly::constant(one);
    FPoly t1({zero, one});
    if (n == 0) return t0;
    FPoly z2({zero, two});
    for (long i = 1; i < n; ++i) {
        FPoly t2 = z2 * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

FPoly random_dense_poly(Rng& rng, long degree, const FieldPtr& field) {
    std::vector<FieldElement> cs;
    for (long i = 0; i < degree; ++i)
        cs.push_back(FieldElement::from_rational(field, Rational(rng.range(-3, 3))));
    long lead = rng.range(1, 3) * (rng.range(0, 1) ? 1 : -1);
    cs.push_back(FieldElement::from_rational(field, Rational(lead)));
    return FPoly(std::move(cs));
}

namespace {

FieldElement random_element(Rng& rng, const FieldPtr& field, bool allow_generator) {
    FieldElement v = FieldElement::from_rational(field, Rational(rng.range(-3, 3)));
    if (allow_generator && !field->is_rational()) {
        FieldElement theta = FieldElement::generator(field);
        v = v + theta * FieldElement::from_rational(field, Rational(rng.range(-2, 2)));
    }
    return v;
}

}  // namespace

ProblemInstance random_certified_instance(std::uint64_t seed, bool quadratic_field) {
    Rng rng(seed);
    FieldPtr field = NumberField::rationals();
    if (quadratic_field) {
        long d = std::vector<long>{2, 3, 5}[static_cast<std::size_t>(rng.range(0, 2))];
        field = NumberField::create(Poly<Rational>({Rational(-d), Rational(0), Rational(1)}), 1);
    }
    FieldElement zero(field, Poly<Rational>());
    FieldElement one = ring_from_int(zero, 1);

    // Endpoints first, then W with the factor (z-a)(z-b) built in, so
    // W(a) = W(b) holds no matter what the rest looks like.
    FieldElement a, b;
    if (quadratic_field) {
        FieldElement theta = FieldElement::generator(field);
        FieldElement r = FieldElement::from_rational(field, Rational(rng.range(-2, 2)));
        FieldElement s = FieldElement::from_rational(field, Rational(rng.range(1, 2)));
        a = r + s * theta;
        b = r - s * theta;
    } else {
        long av = rng.range(-3, 3);
        long bv = av;
        while (bv == av) bv = rng.range(-3, 3);
        a = FieldElement::from_rational(field, Rational(av));
        b = FieldElement::from_rational(field, Rational(bv));
    }

    FPoly vanishing({a * b, -(a + b), one});  // (z-a)(z-b)
    long deg_u = rng.range(0, 2);
    FPoly u;
    {
        std::vector<FieldElement> cs;
        for (long i = 0; i < deg_u; ++i) cs.push_back(random_element(rng, field, quadratic_field));
        FieldElement lead = zero;
        while (lead.is_zero()) lead = random_element(rng, field, quadratic_field);
        cs.push_back(lead);
        u = FPoly(std::move(cs));
    }
    FPoly w = u * vanishing + FPoly::constant(random_element(rng, field, quadratic_field));

    auto random_outer = [&](long maxdeg, long mindeg) {
        long deg = rng.range(mindeg, maxdeg);
        std::vector<FieldElement> cs;
        for (long i = 0; i < deg; ++i) cs.push_back(random_element(rng, field, quadratic_field));
        FieldElement lead = zero;
        while (lead.is_zero()) lead = random_element(rng, field, quadratic_field);
        cs.push_back(lead);
        return FPoly(std::move(cs));
    };
    FPoly outer_p = random_outer(4, 1);
    FPoly outer_q = random_outer(4, 1);

    FPoly P = compose(outer_p, w);
    FPoly Q = compose(outer_q, w);
    return ProblemInstance::from_q(field, P, Q.derivative(), a, b,
                                   "certified-" + std::to_string(seed));
}

ProblemInstance random_plain_instance(std::uint64_t seed) {
    Rng rng(seed);
    FieldPtr field = NumberField::rationals();
    FieldElement one = ring_from_int(FieldElement(), 1);

    long av = rng.range(-3, 3);
    long bv = av;
    while (bv == av) bv = rng.range(-3, 3);
    FieldElement a(av), b(bv);

    FPoly vanishing({a * b, -(a + b), one});
    FPoly v = random_dense_poly(rng, rng.range(0, 4), field);
    FPoly P = v * vanishing + FPoly::constant(FieldElement(rng.range(-3, 3)));
    FPoly q = random_dense_poly(rng, rng.range(0, 6), field);
    return ProblemInstance::from_q(field, P, q, a, b, "plain-" + std::to_string(seed));
}

std::vector<ProblemInstance> bundled_corpus() {
    std::vector<ProblemInstance> out;
    const FieldPtr Q = NumberField::rationals();

    auto fe = [&](long v) { return FieldElement(v); };

    // z^2 symmetric family
    out.push_back(ProblemInstance::from_q(Q, fpoly_from_int_coeffs(Q, {0, 0, 1}),
                                          fpoly_from_int_coeffs(Q, {0, 0, 0, 1}), fe(-1), fe(1),
                                          "square-vanishing"));
    out.push_back(ProblemInstance::from_q(Q, fpoly_from_int_coeffs(Q, {0, 0, 1}),
                                          fpoly_from_int_coeffs(Q, {0, 0, 1}), fe(-1), fe(1),
                                          "square-nonvanishing"));

    // z^3 with cube-root-of-unity endpoints
    {
        auto field = NumberField::create(Poly<Rational>({Rational(1), Rational(1), Rational(1)}), 1);
        FieldElement a = FieldElement::from_rational(field, Rational(1));
        FieldElement b = FieldElement::generator(field);
        out.push_back(ProblemInstance::from_q(field, fpoly_from_int_coeffs(field, {0, 0, 0, 1}),
                                              fpoly_from_int_coeffs(field, {0, 0, 1}), a, b,
                                              "cube-roots-vanishing"));
        out.push_back(ProblemInstance::from_q(field, fpoly_from_int_coeffs(field, {0, 0, 0, 1}),
                                              fpoly_from_int_coeffs(field, {0, 1}), a, b,
                                              "cube-roots-nonvanishing"));
    }

    // z^5 with fifth-root-of-unity endpoints
    {
        auto field = NumberField::create(
            Poly<Rational>({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}), 0);
        FieldElement a = FieldElement::from_rational(field, Rational(1));
        FieldElement b = FieldElement::generator(field);
        out.push_back(ProblemInstance::from_q(field, fpoly_from_int_coeffs(field, {0, 0, 0, 0, 0, 1}),
                                              fpoly_from_int_coeffs(field, {0, 0, 0, 0, 1}), a, b,
                                              "quintic-roots-vanishing"));
    }

    // z^4 + z, indecomposable of composite degree
    {
        FPoly P = fpoly_from_int_coeffs(Q, {0, 1, 0, 0, 1});
        FPoly q = (P * P).derivative() + fpoly_from_int_coeffs(Q, {0, 1});
        out.push_back(ProblemInstance::from_q(Q, P, q, fe(0), fe(-1), "quartic-plus-z"));
    }

    // z^3 - 3z with regular and with critical endpoints
    {
        FPoly P = fpoly_from_int_coeffs(Q, {0, -3, 0, 1});
        FieldElement a = FieldElement(Rational(-2) / 7), b = FieldElement(Rational(-11) / 7);
        out.push_back(ProblemInstance::from_q(Q, P, P.derivative(), a, b, "hill-regular-vanishing"));
        out.push_back(
            ProblemInstance::from_q(Q, P, fpoly_from_int_coeffs(Q, {0, 1}), fe(1), fe(-2), "hill-critical"));
    }

    // Chebyshev instances over Q(sqrt 3), endpoints +-sqrt(3)/2
    {
        auto field = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
        FieldElement half = FieldElement::from_rational(field, Rational(1, 2));
        FieldElement a = -FieldElement::generator(field) * half;
        FieldElement b = FieldElement::generator(field) * half;
        FPoly T6 = chebyshev(6, field);
        out.push_back(ProblemInstance::from_Q(field, T6, chebyshev(2, field), a, b, "chebyshev-t2"));
        out.push_back(ProblemInstance::from_Q(field, T6, chebyshev(3, field), a, b, "chebyshev-t3"));
        out.push_back(ProblemInstance::from_Q(field, T6, chebyshev(2, field) + chebyshev(3, field), a, b,
                                              "chebyshev-t2-plus-t3"));
    }

    // z^4 pairs: certificate vs failing endpoint condition over Q(i)
    out.push_back(ProblemInstance::from_Q(Q, fpoly_from_int_coeffs(Q, {0, 0, 0, 0, 1}),
                                          fpoly_from_int_coeffs(Q, {0, 0, 1}), fe(-1), fe(1),
                                          "quartic-even"));
    {
        auto field = NumberField::create(Poly<Rational>({Rational(1), Rational(0), Rational(1)}), 1);
        FieldElement a = FieldElement::from_rational(field, Rational(1));
        FieldElement b = FieldElement::generator(field);
        out.push_back(ProblemInstance::from_Q(field, fpoly_from_int_coeffs(field, {0, 0, 0, 0, 1}),
                                              fpoly_from_int_coeffs(field, {0, 0, 1}), a, b,
                                              "quartic-gauss"));
    }
    return out;
}

}  // namespace pmp
