#ifndef PMP_FIELD_HPP
#define PMP_FIELD_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "pmp/poly.hpp"
#include "pmp/rational.hpp"

namespace pmp {

// Accurate even for huge numerators/denominators (goes through a wide float).
double to_double(const Rational& r);

/// A simple extension Q[t]/(f) with one chosen complex embedding. Degree 1
/// means plain Q. Irreducibility of the modulus is asserted by the caller;
/// a failed inversion during arithmetic reports the violation.
class NumberField {
   public:
    // modulus must be monic of degree >= 1; embedding_index selects one
    // complex root of it, with roots sorted by (real, imaginary) part.
    static std::shared_ptr<const NumberField> create(Poly<Rational> modulus, int embedding_index);
    static const std::shared_ptr<const NumberField>& rationals();

    long degree() const { return modulus_.degree(); }
    bool is_rational() const { return degree() == 1; }
    const Poly<Rational>& modulus() const { return modulus_; }
    int embedding_index() const { return embedding_index_; }

    // Generator root at full double precision (computed at construction).
    std::complex<double> generator_root() const { return root_; }

    // Newton-refined generator root; precision is in binary digits.
    std::complex<double> generator_root(int precision_bits) const;

    bool same_as(const NumberField& other) const {
        return modulus_ == other.modulus_ && embedding_index_ == other.embedding_index_;
    }

   private:
    NumberField(Poly<Rational> modulus, int embedding_index);

    Poly<Rational> modulus_;
    int embedding_index_;
    std::complex<double> root_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField: a polynomial in the generator, reduced modulo
/// the field modulus. Plain rationals (degree-1 field) coerce into any
/// field on contact; elements of two distinct extensions never mix.
class FieldElement {
   public:
    FieldElement() : field_(NumberField::rationals()) {}
    explicit FieldElement(long v)
        : field_(NumberField::rationals()), repr_(Poly<Rational>::constant(Rational(v))) {}
    explicit FieldElement(Rational r)
        : field_(NumberField::rationals()), repr_(Poly<Rational>::constant(std::move(r))) {}
    FieldElement(FieldPtr field, Poly<Rational> repr);

    static FieldElement generator(const FieldPtr& field);
    static FieldElement from_rational(const FieldPtr& field, Rational r);

    const FieldPtr& field() const { return field_; }
    const Poly<Rational>& repr() const { return repr_; }

    bool is_zero() const { return repr_.is_zero(); }
    bool is_rational_value() const { return repr_.degree() <= 0; }
    Rational as_rational() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement inverse() const;
    FieldElement pow(unsigned long e) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Complex value under the field embedding, |error| <= 2^-precision * max(1,|value|).
    std::complex<double> embed(int precision_bits = 48) const;

    std::string to_string() const;
    static FieldElement parse(const FieldPtr& field, const std::string& text);

   private:
    FieldPtr field_;
    Poly<Rational> repr_;
};

// Scalar hooks so Poly<FieldElement> works.
inline FieldElement ring_zero(const FieldElement& sample) {
    return FieldElement(sample.field(), Poly<Rational>());
}
inline FieldElement ring_from_int(const FieldElement& sample, long v) {
    return FieldElement(sample.field(), Poly<Rational>::constant(Rational(v)));
}

using FPoly = Poly<FieldElement>;
using CPoly = Poly<std::complex<double>>;

// Extended Euclid in Q[x]: returns (g, u, v) with u*a + v*b = g.
std::tuple<Poly<Rational>, Poly<Rational>, Poly<Rational>> extended_gcd(const Poly<Rational>& a,
                                                                        const Poly<Rational>& b);

FPoly fpoly_from_int_coeffs(const FieldPtr& field, const std::vector<long>& ascending);
CPoly embed_poly(const FPoly& p, int precision_bits = 48);

}  // namespace pmp

#endif
