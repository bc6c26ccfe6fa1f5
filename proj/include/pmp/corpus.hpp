#ifndef PMP_CORPUS_HPP
#define PMP_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "pmp/moments.hpp"

namespace pmp {

// Deterministic splitmix64; keeps every seeded artifact reproducible
// across standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

FPoly chebyshev(long n, const FieldPtr& field);

/// Instance built from a random (outer_p, outer_q, W) triple with
/// W(a) = W(b) by construction; every moment vanishes for these.
ProblemInstance random_certified_instance(std::uint64_t seed, bool quadratic_field);

/// Arbitrary valid instance (P(a) = P(b) forced by construction, q free).
ProblemInstance random_plain_instance(std::uint64_t seed);

/// Random P of the given degree with distinct small-integer coefficients.
FPoly random_dense_poly(Rng& rng, long degree, const FieldPtr& field);

/// The instances shipped with the tool.
std::vector<ProblemInstance> bundled_corpus();

}  // namespace pmp

#endif
