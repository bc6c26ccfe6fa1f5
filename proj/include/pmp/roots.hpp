#ifndef PMP_ROOTS_HPP
#define PMP_ROOTS_HPP

#include <complex>
#include <vector>

#include "pmp/poly.hpp"

namespace pmp {

struct RootsOptions {
    double tol = 1e-12;            // relative residual target
    double cluster_radius = 1e-8;  // relative merge radius for multiple roots
    int max_iter = 200;
};

struct RootCluster {
    std::complex<double> value;
    int multiplicity;
};

/// All roots by simultaneous Aberth-Ehrlich iteration, unclustered.
/// Residual |p(z)| <= tol * sum |a_i||z|^i at every returned point.
std::vector<std::complex<double>> aberth_roots(const Poly<std::complex<double>>& p,
                                               const RootsOptions& opt = {});

/// Roots with near-coincident points merged into multiplicity clusters.
std::vector<RootCluster> roots_numeric(const Poly<std::complex<double>>& p,
                                       const RootsOptions& opt = {});

}  // namespace pmp

#endif
