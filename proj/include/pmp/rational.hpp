#ifndef PMP_RATIONAL_HPP
#define PMP_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "pmp/errors.hpp"

namespace pmp {

// Exact rational scalar. GMP keeps the representation canonical
// (reduced, positive denominator, zero = 0/1).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw ParseError("not a rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace pmp

#endif
