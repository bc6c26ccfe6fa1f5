#ifndef PMP_MONODROMY_HPP
#define PMP_MONODROMY_HPP

#include <complex>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/moments.hpp"
#include "pmp/permutation.hpp"
#include "pmp/poly.hpp"
#include "pmp/roots.hpp"

namespace pmp {

using Cx = std::complex<double>;

struct TrackOptions {
    double newton_tol = 1e-12;   // relative corrector tolerance
    int max_newton = 5;          // corrector iterations per accepted step
    double sep_factor = 10.0;    // branch separation over last correction
    double min_step_frac = 1e-9; // step floor, fraction of path length
    double initial_step = 0.25;
};

struct MonodromyOptions {
    TrackOptions track;
    double cluster_tol = 1e-8;
    double margin_factor = 0.05;
    int embed_precision = 48;
    int circle_segments = 48;
};

std::vector<Cx> critical_values(const CPoly& P, const RootsOptions& ropt = {});

/// Continue the fiber values along a polyline, all branches at once;
/// output index i continues input index i.
std::vector<Cx> track_path(const CPoly& P, const std::vector<Cx>& path, std::vector<Cx> values,
                           const TrackOptions& opt = {});

/// Permutation of a closed polyline loop: branch j ends at the start
/// position of branch perm(j).
Permutation loop_permutation(const CPoly& P, const std::vector<Cx>& loop, const std::vector<Cx>& fiber,
                             const TrackOptions& opt = {});

struct LoopGenerator {
    Cx critical_value;
    Permutation perm;
};

struct MonodromyData {
    CPoly P;
    std::vector<Cx> critical_values;
    Cx base_point;
    std::vector<Cx> base_fiber;
    std::vector<LoopGenerator> loop_generators;  // canonical angular order
    Permutation infinity_perm;
    GroupProperties props;
    unsigned long group_order = 0;  // 0 when the enumeration cap was hit
    std::vector<std::vector<std::vector<int>>> block_systems;
    std::vector<Cx> sample_parameters;
    std::vector<std::vector<Cx>> branch_samples;  // [sample][branch]
};

/// Full monodromy apparatus of P^-1: one loop generator per critical value
/// from a deterministic exterior base point, the loop at infinity, and
/// group-theoretic properties of the generated permutation group.
MonodromyData monodromy_group(const FPoly& P, const MonodromyOptions& opt = {});
MonodromyData monodromy_group(const CPoly& P, const MonodromyOptions& opt = {});

/// Canonical branch labeling at the shared endpoint value t0 = P(a):
/// branches renumbered so the loop at infinity is (0 1 ... n-1) and edge 0
/// starts at the vertex limiting to a; rho1 is the local loop at t0 (the
/// identity when t0 is regular), rho2 the folded loop around the remaining
/// critical values, rho1 then rho2 = the full cycle.
struct OmegaLabeling {
    Permutation rho1;
    Permutation rho2;
    int k = 0;                       // edge whose end vertex limits to b
    std::vector<int> branch_order;   // raw index -> canonical label
    Cx base_point;
    std::vector<Cx> ordered_fiber;   // fiber at base_point, canonical order
    std::vector<int> edge_starts;    // edge -> vertex class (rho1-cycle id)
    std::vector<int> edge_ends;
    long d_a = 1;                    // cluster sizes at a and b
    long d_b = 1;
};

OmegaLabeling omega_labeling(const ProblemInstance& inst, const MonodromyData& mono,
                             const MonodromyOptions& opt = {});

/// Q-values on the branches partitioned by numeric equality across all
/// samples; class count is the branch count of Q(P^-1).
struct BranchClasses {
    std::vector<std::vector<int>> classes;
    long class_count = 0;
    double margin = 0.0;  // min inter-class over max intra-class distance
};

BranchClasses branch_equalities(const FPoly& P, const FPoly& Q, const MonodromyData& mono,
                                const MonodromyOptions& opt = {});

/// Numeric verification of the cyclic branch-sum identities behind the
/// endpoint argument, power-by-power, plus the Vandermonde singularity test
/// over the branch clusters at a and b.
struct TraceCheck {
    long j = 1;
    double lhs_abs = 0.0;
    double residual = 0.0;
    bool pass = false;
};

struct ProofTrace {
    std::vector<TraceCheck> power_identities;  // j = 1 .. max_j
    int vandermonde_dim = 0;
    double vandermonde_abs_det = 0.0;
    double min_value_gap = 0.0;
    bool vandermonde_singular = false;
    bool branch_equality_forced = false;
};

ProofTrace proof_trace(const ProblemInstance& inst, const OmegaLabeling& labeling, long max_j,
                       const MonodromyOptions& opt = {});

/// Exact confirmation of the double-transitivity collapse: given a numeric
/// linear relation among branch values of Q(P^-1) with coefficients not all
/// equal, and a doubly transitive group, Q must factor through P.
bool lemma2_check(const FPoly& P, const FPoly& Q, const std::vector<FieldElement>& coefficients,
                  const MonodromyData& mono, const MonodromyOptions& opt = {});

}  // namespace pmp

#endif
