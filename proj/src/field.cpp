#include "pmp/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "pmp/errors.hpp"
#include "pmp/roots.hpp"

namespace pmp {

double to_double(const Rational& r) {
    // num/den straight in double overflows for the big exact values moments
    // produce; a 256-bit float intermediate keeps the conversion faithful.
    using Wide = boost::multiprecision::number<boost::multiprecision::gmp_float<77>>;
    return static_cast<double>(Wide(r));
}

namespace {

std::complex<double> eval_rational_poly(const Poly<Rational>& p, std::complex<double> z) {
    if (p.is_zero()) return {0.0, 0.0};
    std::complex<double> acc(to_double(p.leading()), 0.0);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + to_double(c[i]);
    return acc;
}

}  // namespace

NumberField::NumberField(Poly<Rational> modulus, int embedding_index)
    : modulus_(std::move(modulus)), embedding_index_(embedding_index) {
    if (degree() == 1) {
        // Plain Q; the generator is the rational root itself.
        root_ = std::complex<double>(to_double(-modulus_.coeff(0)), 0.0);
        return;
    }
    CPoly numeric = modulus_.map([](const Rational& r) { return std::complex<double>(to_double(r), 0.0); });
    auto rs = aberth_roots(numeric);
    std::sort(rs.begin(), rs.end(), [](std::complex<double> x, std::complex<double> y) {
        double s = std::max({1.0, std::abs(x), std::abs(y)});
        if (std::abs(x.real() - y.real()) > 1e-10 * s) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    root_ = rs[static_cast<std::size_t>(embedding_index_)];
}

std::shared_ptr<const NumberField> NumberField::create(Poly<Rational> modulus, int embedding_index) {
    if (modulus.degree() < 1) throw InvalidInput("field modulus must have degree >= 1");
    if (!(modulus.leading() == Rational(1))) throw InvalidInput("field modulus must be monic");
    if (embedding_index < 0 || embedding_index >= modulus.degree())
        throw InvalidInput("embedding index out of range");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(modulus), embedding_index));
}

const std::shared_ptr<const NumberField>& NumberField::rationals() {
    static const std::shared_ptr<const NumberField> q =
        create(Poly<Rational>({Rational(0), Rational(1)}), 0);
    return q;
}

std::complex<double> NumberField::generator_root(int precision_bits) const {
    if (precision_bits > 48)
        throw RootIsolationFailure("requested precision exceeds double-precision support");
    if (is_rational()) return root_;
    // Newton refinement from the construction-time approximation.
    Poly<Rational> deriv = modulus_.derivative();
    std::complex<double> z = root_;
    double target = std::ldexp(1.0, -precision_bits - 2) * std::max(1.0, std::abs(z));
    for (int it = 0; it < 64; ++it) {
        std::complex<double> f = eval_rational_poly(modulus_, z);
        std::complex<double> df = eval_rational_poly(deriv, z);
        if (df == std::complex<double>(0.0)) throw RootIsolationFailure("derivative vanished during refinement");
        std::complex<double> step = f / df;
        z -= step;
        if (std::abs(step) <= target) return z;
    }
    throw RootIsolationFailure("generator root refinement did not converge");
}

FieldElement::FieldElement(FieldPtr field, Poly<Rational> repr) : field_(std::move(field)) {
    if (!field_) throw InvalidInput("null field");
    if (repr.degree() >= field_->degree()) repr = divmod(repr, field_->modulus()).second;
    repr_ = std::move(repr);
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    return FieldElement(field, Poly<Rational>({Rational(0), Rational(1)}));
}

FieldElement FieldElement::from_rational(const FieldPtr& field, Rational r) {
    return FieldElement(field, Poly<Rational>::constant(std::move(r)));
}

Rational FieldElement::as_rational() const {
    if (!is_rational_value()) throw InvalidInput("element is not rational");
    return repr_.is_zero() ? Rational(0) : repr_.coeffs()[0];
}

namespace {

// A common field for two operands: plain rationals coerce into any
// extension; two distinct extensions never mix.
std::pair<FieldElement, FieldElement> aligned(const FieldElement& x, const FieldElement& y) {
    if (x.field() == y.field() || x.field()->same_as(*y.field())) return {x, y};
    if (y.field()->is_rational()) return {x, FieldElement(x.field(), y.repr())};
    if (x.field()->is_rational()) return {FieldElement(y.field(), x.repr()), y};
    throw FieldMismatch("elements of distinct extensions");
}

}  // namespace

FieldElement FieldElement::operator-() const { return FieldElement(field_, -repr_); }

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    auto [x, y] = aligned(*this, rhs);
    return FieldElement(x.field(), x.repr() + y.repr());
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    auto [x, y] = aligned(*this, rhs);
    return FieldElement(x.field(), x.repr() * y.repr());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InvalidInput("division by zero field element");
    if (field_->is_rational() || repr_.degree() == 0)
        return FieldElement(field_, Poly<Rational>::constant(Rational(1) / repr_.coeffs()[0]));
    auto [g, u, v] = extended_gcd(repr_, field_->modulus());
    if (g.degree() != 0)
        throw NonInvertible("element shares a factor with the modulus; the modulus is reducible");
    return FieldElement(field_, u / g.coeffs()[0]);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    auto [x, y] = aligned(*this, rhs);
    return x * y.inverse();
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement acc = ring_from_int(*this, 1);
    for (unsigned long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (field_ == rhs.field_ || field_->same_as(*rhs.field_)) return repr_ == rhs.repr_;
    if (field_->is_rational() || rhs.field_->is_rational()) return repr_ == rhs.repr_;
    throw FieldMismatch("comparing elements of distinct extensions");
}

std::complex<double> FieldElement::embed(int precision_bits) const {
    std::complex<double> z = field_->generator_root(precision_bits);
    return eval_rational_poly(repr_, z);
}

std::string FieldElement::to_string() const {
    if (repr_.is_zero()) return "0";
    if (is_rational_value()) return repr_.coeffs()[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < repr_.coeffs().size(); ++i) {
        const Rational& c = repr_.coeff(i);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c.str();
        } else {
            os << "(" << c.str() << ")t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct ScalarParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
        if (digits == 0) throw ParseError("expected a number at position " + std::to_string(start) + " in '" + s + "'");
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t d2 = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++d2;
            if (d2 == 0) throw ParseError("expected a denominator in '" + s + "'");
        }
        return rational_from_string(s.substr(start, pos - start));
    }

    // term := rational | [rational|(rational)] [*] t [^k] | t [^k]
    void parse_term(int sign, std::vector<Rational>& coeffs) {
        Rational c(sign);
        bool have_coeff = false;
        if (accept('(')) {
            c *= parse_rational();
            if (!accept(')')) throw ParseError("missing ')' in '" + s + "'");
            have_coeff = true;
        } else if (peek() != 't') {
            c *= parse_rational();
            have_coeff = true;
        }
        accept('*');
        std::size_t power = 0;
        if (accept('t')) {
            power = 1;
            if (accept('^')) {
                Rational e = parse_rational();
                if (!is_integer(e) || e < 0) throw ParseError("bad exponent in '" + s + "'");
                power = static_cast<std::size_t>(numerator(e).convert_to<long>());
            }
        } else if (!have_coeff) {
            throw ParseError("expected a term in '" + s + "'");
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += c;
    }
};

}  // namespace

FieldElement FieldElement::parse(const FieldPtr& field, const std::string& text) {
    ScalarParser p(text);
    std::vector<Rational> coeffs;
    int sign = 1;
    if (p.accept('-'))
        sign = -1;
    else
        p.accept('+');
    p.parse_term(sign, coeffs);
    while (!p.eof()) {
        if (p.accept('+'))
            sign = 1;
        else if (p.accept('-'))
            sign = -1;
        else
            throw ParseError("unexpected character at position " + std::to_string(p.pos) + " in '" + text + "'");
        p.parse_term(sign, coeffs);
    }
    Poly<Rational> repr(std::move(coeffs));
    if (repr.degree() >= field->degree() && !field->is_rational())
        throw ParseError("scalar '" + text + "' has degree beyond the field");
    if (field->is_rational() && repr.degree() > 0) throw ParseError("scalar '" + text + "' uses t but the field is Q");
    return FieldElement(field, std::move(repr));
}

std::tuple<Poly<Rational>, Poly<Rational>, Poly<Rational>> extended_gcd(const Poly<Rational>& a,
                                                                        const Poly<Rational>& b) {
    Poly<Rational> r0 = a, r1 = b;
    Poly<Rational> s0 = Poly<Rational>::constant(Rational(1)), s1;
    Poly<Rational> t0, t1 = Poly<Rational>::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly<Rational> s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Poly<Rational> t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return {r0, s0, t0};
}

FPoly fpoly_from_int_coeffs(const FieldPtr& field, const std::vector<long>& ascending) {
    std::vector<FieldElement> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.push_back(FieldElement::from_rational(field, Rational(v)));
    return FPoly(std::move(cs));
}

CPoly embed_poly(const FPoly& p, int precision_bits) {
    return p.map([&](const FieldElement& c) { return c.embed(precision_bits); });
}

}  // namespace pmp
