#ifndef PMP_DECOMPOSE_HPP
#define PMP_DECOMPOSE_HPP

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/moments.hpp"
#include "pmp/poly.hpp"

namespace pmp {

/// Witness for the composition condition: P = outer_p(W), Q = outer_q(W),
/// both verified exactly at construction, W monic with W(0) = 0, deg W >= 2.
struct CompositionCertificate {
    FPoly W;
    FPoly outer_p;
    FPoly outer_q;
    bool endpoint_equal = false;  // W(a) = W(b), checked exactly
};

struct MultiplicityData {
    long d_a = 1;
    long d_b = 1;
};

/// The normalized candidate right factor of each degree m dividing deg P:
/// monic, zero constant term. Uniquely determined by the series r-th root
/// of the monic normalization of P; for m = deg P it is the shifted monic
/// normalization itself.
FPoly right_factor_candidate(const FPoly& P, long m);

/// Verified proper right factors (m, W_m) for every divisor m of deg P with
/// 1 < m < deg P, ascending by degree.
std::vector<std::pair<long, FPoly>> right_factors(const FPoly& P);

bool is_indecomposable(const FPoly& P);

/// Maximal-degree common right divisor of P and Q in the composition sense,
/// with both outer factors; includes W ~ P itself (linear outer). Nothing
/// but linear common factors gives nullopt.
std::optional<std::tuple<FPoly, FPoly, FPoly>> common_right_divisor(const FPoly& P, const FPoly& Q);

/// Largest-degree common right factor W additionally satisfying W(a) = W(b)
/// exactly; scans all common factor degrees, not only the maximal one.
std::optional<CompositionCertificate> composition_condition(const ProblemInstance& inst);

/// d_a = order of the zero of P - P(a) at a, via exact derivative tests.
MultiplicityData multiplicities(const FPoly& P, const FieldElement& a, const FieldElement& b);
long point_multiplicity(const FPoly& P, const FieldElement& c);

}  // namespace pmp

#endif
