#ifndef PMP_PUISEUX_HPP
#define PMP_PUISEUX_HPP

#include <complex>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/poly.hpp"

namespace pmp {

/// Expansion of Q on the branches of P^-1 at infinity in powers of t^(1/n),
/// n = deg P: branch 0 carries sum a_k t^(k/n) with the principal root, and
/// branch i is obtained by a_k -> a_k * shift^(i*k), shift = exp(2 pi i / n).
struct PuiseuxSeries {
    long ramification = 0;
    std::vector<std::pair<long, std::complex<double>>> coefficients;  // k descending from deg Q
    std::complex<double> branch_shift;

    std::complex<double> coefficient(long k) const;
    // Coefficients of branch i under the shift law.
    std::vector<std::pair<long, std::complex<double>>> branch(long i) const;
};

/// P must be monic after exact normalization; the requested number of
/// leading terms is computed exactly in the coefficient field and embedded.
PuiseuxSeries puiseux_at_infinity(const FPoly& P, const FPoly& Q, long terms, int precision_bits = 48);

}  // namespace pmp

#endif
