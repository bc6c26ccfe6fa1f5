#include <doctest.h>

#include <complex>

#include "pmp/corpus.hpp"
#include "pmp/errors.hpp"
#include "pmp/field.hpp"

using namespace pmp;

namespace {

FieldPtr sqrt3_field() {
    return NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 1);
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    FieldElement half(Rational(1, 2));
    FieldElement third(Rational(1, 3));
    CHECK((half + third).as_rational() == Rational(5, 6));
    CHECK((half * third).as_rational() == Rational(1, 6));
    CHECK((half / third).as_rational() == Rational(3, 2));
}

TEST_CASE("generator squares to the modulus root") {
    auto f = sqrt3_field();
    FieldElement theta = FieldElement::generator(f);
    CHECK((theta * theta).as_rational() == Rational(3));
}

TEST_CASE("inversion through the extended gcd") {
    auto f = sqrt3_field();
    FieldElement theta = FieldElement::generator(f);
    FieldElement one = ring_from_int(theta, 1);
    FieldElement x = one + theta;
    FieldElement inv = x.inverse();
    // (1+theta)(-1+theta) = 2, so the inverse is (-1+theta)/2
    FieldElement expected = (theta - one) / ring_from_int(theta, 2);
    CHECK(inv == expected);
    CHECK(x * inv == one);
}

TEST_CASE("rationals coerce into extensions, extensions never mix") {
    auto f = sqrt3_field();
    FieldElement theta = FieldElement::generator(f);
    FieldElement sum = theta + FieldElement(Rational(1, 2));
    CHECK(sum - theta == FieldElement::from_rational(f, Rational(1, 2)));

    auto g = NumberField::create(Poly<Rational>({Rational(-2), Rational(0), Rational(1)}), 1);
    CHECK_THROWS_AS(theta + FieldElement::generator(g), FieldMismatch);
}

TEST_CASE("embedding picks the sorted root and matches sqrt(3)") {
    auto f = sqrt3_field();
    FieldElement theta = FieldElement::generator(f);
    std::complex<double> z = theta.embed(48);
    CHECK(std::abs(z - std::complex<double>(std::sqrt(3.0), 0.0)) < 1e-14);

    auto fneg = NumberField::create(Poly<Rational>({Rational(-3), Rational(0), Rational(1)}), 0);
    CHECK(std::abs(FieldElement::generator(fneg).embed(48) + std::sqrt(3.0)) < 1e-14);
}

TEST_CASE("embedding of i picks positive imaginary part at index 1") {
    auto f = NumberField::create(Poly<Rational>({Rational(1), Rational(0), Rational(1)}), 1);
    std::complex<double> z = FieldElement::generator(f).embed(48);
    CHECK(std::abs(z - std::complex<double>(0.0, 1.0)) < 1e-14);
}

TEST_CASE("plain rational embeds exactly") {
    FieldElement x(Rational(3, 4));
    CHECK(x.embed(48) == std::complex<double>(0.75, 0.0));
}

TEST_CASE("embedding is a ring homomorphism within tolerance") {
    auto f = sqrt3_field();
    Rng rng(42);
    const int precision = 40;
    const double tol = 10.0 * std::ldexp(1.0, -precision);
    for (int iter = 0; iter < 50; ++iter) {
        FieldElement theta = FieldElement::generator(f);
        auto rand_elem = [&] {
            return FieldElement::from_rational(f, Rational(rng.range(-9, 9), rng.range(1, 5))) +
                   theta * FieldElement::from_rational(f, Rational(rng.range(-9, 9)));
        };
        FieldElement x = rand_elem(), y = rand_elem();
        auto ex = x.embed(precision), ey = y.embed(precision), exy = (x * y).embed(precision);
        double scale = std::max({1.0, std::abs(ex) * std::abs(ey), std::abs(exy)});
        CHECK(std::abs(exy - ex * ey) <= tol * scale);
    }
}

TEST_CASE("field arithmetic laws on random triples") {
    auto f = sqrt3_field();
    Rng rng(7);
    FieldElement theta = FieldElement::generator(f);
    auto rand_elem = [&] {
        return FieldElement::from_rational(f, Rational(rng.range(-9, 9))) +
               theta * FieldElement::from_rational(f, Rational(rng.range(-9, 9)));
    };
    for (int iter = 0; iter < 100; ++iter) {
        FieldElement x = rand_elem(), y = rand_elem(), z = rand_elem();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
    }
}

TEST_CASE("scalar text round-trips exactly") {
    auto f = sqrt3_field();
    Rng rng(99);
    FieldElement theta = FieldElement::generator(f);
    for (int iter = 0; iter < 60; ++iter) {
        FieldElement x = FieldElement::from_rational(f, Rational(rng.range(-20, 20), rng.range(1, 7))) +
                         theta * FieldElement::from_rational(f, Rational(rng.range(-20, 20), rng.range(1, 7)));
        CHECK(FieldElement::parse(f, x.to_string()) == x);
    }
    CHECK(FieldElement::parse(f, "(1/2)+(3/2)t") ==
          FieldElement::from_rational(f, Rational(1, 2)) + theta * FieldElement::from_rational(f, Rational(3, 2)));
    CHECK(FieldElement::parse(NumberField::rationals(), "-2") == FieldElement(-2));
    CHECK(FieldElement::parse(NumberField::rationals(), "3/4") == FieldElement(Rational(3, 4)));
}

TEST_CASE("division by a modulus factor reports a reducible modulus") {
    // t^2 - 1 is reducible; (t-1) shares a factor with it.
    auto f = NumberField::create(Poly<Rational>({Rational(-1), Rational(0), Rational(1)}), 1);
    FieldElement x = FieldElement::generator(f) - FieldElement(1);
    CHECK_THROWS_AS(x.inverse(), NonInvertible);
}
