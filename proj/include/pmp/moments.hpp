#ifndef PMP_MOMENTS_HPP
#define PMP_MOMENTS_HPP

#include <string>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/poly.hpp"

namespace pmp {

/// One problem instance: P, the integrand q with its antiderivative Q, and
/// endpoints a != b with P(a) = P(b). When built from q, the antiderivative
/// gauge is the zero constant term; when built from Q, Q is kept as given.
struct ProblemInstance {
    FieldPtr field;
    FPoly P;
    FPoly q;
    FPoly Q;
    FieldElement a;
    FieldElement b;
    FieldElement t0;  // shared endpoint value P(a) = P(b)
    std::string name;

    static ProblemInstance from_q(FieldPtr field, FPoly P, FPoly q, FieldElement a, FieldElement b,
                                  std::string name = "");
    static ProblemInstance from_Q(FieldPtr field, FPoly P, FPoly Q, FieldElement a, FieldElement b,
                                  std::string name = "");

    long deg_p() const { return P.degree(); }
};

/// Exact integral of polynomials between two fixed endpoints, with the
/// coefficient weights (b^(k+1) - a^(k+1))/(k+1) grown on demand.
class Integrator {
   public:
    Integrator(FieldElement a, FieldElement b);
    FieldElement integrate(const FPoly& p);

   private:
    void ensure(std::size_t k);
    FieldElement a_, b_;
    FieldElement apow_, bpow_;  // a^(k+1), b^(k+1) for the last table entry
    std::vector<FieldElement> weights_;
};

FieldElement single_moment(const ProblemInstance& inst, long i);
FieldElement double_moment(const ProblemInstance& inst, long i, long j);

// Batch scan; entry order is i ascending (and j ascending inside i).
std::vector<FieldElement> single_moments(const ProblemInstance& inst, long max_i);

struct MomentEntry {
    long i;
    long j;
    FieldElement value;
};

struct MomentReport {
    std::vector<MomentEntry> single_moments;  // j = -1 marker unused; j field is 0
    std::vector<MomentEntry> double_moments;
    long max_i = 0;
    long max_j = 0;
    bool all_zero_single = true;
    bool all_zero_double = true;
};

MomentReport moment_report(const ProblemInstance& inst, long max_i, long max_j);

struct MomentKernel {
    FPoly P;
    FieldElement a;
    FieldElement b;
    long degree_bound = 0;
    long moment_bound = 0;
    std::vector<FPoly> basis;
    bool stabilized = false;
};

/// Exact kernel of q -> (m_0 ... m_N) on deg q <= degree_bound, with N grown
/// until the dimension holds still for two steps (or the cap is hit).
MomentKernel moment_kernel(const FPoly& P, const FieldElement& a, const FieldElement& b,
                           long degree_bound);

/// Exact check of the integration-by-parts link between the coefficients of
/// the boundary Cauchy integral at infinity and the moment sequence:
///   (i+1) * int_a^b Q P' P^i = [Q P^(i+1)]_a^b - m_(i+1)   for 0 <= i < max_i.
bool cauchy_expansion_check(const ProblemInstance& inst, long max_i);

}  // namespace pmp

#endif
