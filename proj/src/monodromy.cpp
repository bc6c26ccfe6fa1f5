#include "pmp/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double norm_angle_02pi(double a) {
    a = std::fmod(a, kTau);
    if (a <= 0) a += kTau;
    return a;
}

double dist_point_segment(Cx p, Cx a, Cx b) {
    Cx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

std::vector<Cx> circle_polyline(Cx center, double radius, double start_angle, int segments) {
    std::vector<Cx> pts;
    pts.reserve(static_cast<std::size_t>(segments) + 1);
    for (int k = 0; k <= segments; ++k) {
        double th = start_angle + kTau * static_cast<double>(k) / static_cast<double>(segments);
        pts.push_back(center + radius * Cx(std::cos(th), std::sin(th)));
    }
    pts.back() = center + radius * Cx(std::cos(start_angle), std::sin(start_angle));
    return pts;
}

// Lasso from t1: straight to the entry point of a counter-clockwise circle
// around c, once around, and back.
std::vector<Cx> petal_polyline(Cx t1, Cx c, double radius, int segments) {
    double th = std::arg(t1 - c);
    Cx entry = c + radius * Cx(std::cos(th), std::sin(th));
    std::vector<Cx> pts;
    pts.push_back(t1);
    auto circ = circle_polyline(c, radius, th, segments);
    pts.insert(pts.end(), circ.begin(), circ.end());
    pts.push_back(t1);
    return pts;
}

double polyline_length(const std::vector<Cx>& pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += std::abs(pts[i] - pts[i - 1]);
    return len;
}

// Match every point of `to` with its nearest point of `from`, demanding a
// clear factor-10 margin over the runner-up and a bijection.
Permutation match_points(const std::vector<Cx>& from, const std::vector<Cx>& to) {
    const std::size_t n = from.size();
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        double best = 1e300, second = 1e300;
        std::size_t arg_best = 0;
        for (std::size_t k = 0; k < n; ++k) {
            double d = std::abs(to[j] - from[k]);
            if (d < best) {
                second = best;
                best = d;
                arg_best = k;
            } else if (d < second) {
                second = d;
            }
        }
        if (n > 1 && best * 10.0 > second)
            throw TrackingBreakdown("branch endpoints too close to match up");
        if (used[arg_best]) throw TrackingBreakdown("two branches matched the same endpoint");
        used[arg_best] = true;
        img[j] = static_cast<int>(arg_best);
    }
    return Permutation(std::move(img));
}

struct CEval {
    const std::vector<Cx>& a;
    Cx operator()(Cx z) const {
        Cx v = a.back();
        for (std::size_t i = a.size() - 1; i-- > 0;) v = v * z + a[i];
        return v;
    }
};

}  // namespace

std::vector<Cx> critical_values(const CPoly& P, const RootsOptions& ropt) {
    if (P.degree() < 2) throw InvalidInput("critical values need deg P >= 2");
    auto crit_points = roots_numeric(P.derivative(), ropt);
    std::vector<Cx> vals;
    vals.reserve(crit_points.size());
    for (const auto& r : crit_points) vals.push_back(P(r.value));

    // Distinct critical points may share a critical value; merge those.
    std::vector<Cx> out;
    for (Cx v : vals) {
        bool fresh = true;
        for (Cx& w : out) {
            if (std::abs(v - w) <= ropt.cluster_radius * 10.0 * std::max(1.0, std::abs(v))) {
                fresh = false;
                break;
            }
        }
        if (fresh) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](Cx x, Cx y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

std::vector<Cx> track_path(const CPoly& P, const std::vector<Cx>& path, std::vector<Cx> values,
                           const TrackOptions& opt) {
    if (static_cast<long>(values.size()) != P.degree())
        throw InvalidInput("fiber size must equal deg P");
    CEval f{P.coeffs()};
    CPoly dPoly = P.derivative();
    CEval df{dPoly.coeffs()};
    const double path_len = polyline_length(path);
    const double step_floor = opt.min_step_frac * path_len;

    const std::size_t n = values.size();
    std::vector<Cx> trial(n);

    for (std::size_t seg = 1; seg < path.size(); ++seg) {
        const Cx z0 = path[seg - 1], z1 = path[seg];
        const double seg_len = std::abs(z1 - z0);
        if (seg_len == 0.0) continue;
        double pos = 0.0;
        double h = opt.initial_step;
        while (pos < 1.0) {
            h = std::min(h, 1.0 - pos);
            const Cx t_cur = z0 + pos * (z1 - z0);
            const Cx t_new = z0 + (pos + h) * (z1 - z0);
            const Cx dt = t_new - t_cur;

            bool ok = true;
            double max_corr = 0.0;
            for (std::size_t j = 0; j < n && ok; ++j) {
                Cx z = values[j];
                Cx dpz = df(z);
                if (std::abs(dpz) > 1e-14) z += dt / dpz;  // Euler predictor
                bool converged = false;
                double last = 0.0;
                for (int it = 0; it < opt.max_newton; ++it) {
                    Cx d = df(z);
                    if (d == Cx(0.0)) break;
                    Cx step = (f(z) - t_new) / d;
                    z -= step;
                    last = std::abs(step);
                    if (last <= opt.newton_tol * std::max(1.0, std::abs(z))) {
                        converged = true;
                        break;
                    }
                }
                if (!converged) {
                    ok = false;
                    break;
                }
                trial[j] = z;
                max_corr = std::max(max_corr, last);
            }
            if (ok && n > 1) {
                double min_sep = 1e300;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        min_sep = std::min(min_sep, std::abs(trial[i] - trial[j]));
                if (min_sep < opt.sep_factor * max_corr) ok = false;
            }
            if (ok) {
                values = trial;
                pos += h;
                h = std::min(h * 1.7, 0.5);
            } else {
                h *= 0.5;
                if (h * seg_len < step_floor) throw TrackingBreakdown("step size underflow while tracking");
            }
        }
    }
    return values;
}

Permutation loop_permutation(const CPoly& P, const std::vector<Cx>& loop, const std::vector<Cx>& fiber,
                             const TrackOptions& opt) {
    auto end_values = track_path(P, loop, fiber, opt);
    return match_points(fiber, end_values);
}

namespace {

struct BasePlan {
    Cx t1;
    double theta_out = 0.0;
    std::vector<double> petal_radii;
};

double petal_radius_for(const std::vector<Cx>& cvs, std::size_t k, double fallback) {
    double r = 1e300;
    for (std::size_t j = 0; j < cvs.size(); ++j)
        if (j != k) r = std::min(r, 0.25 * std::abs(cvs[j] - cvs[k]));
    if (r == 1e300) r = fallback;
    return r;
}

// Deterministic exterior base point: scan candidate directions and keep the
// one whose lasso segments stay farthest from foreign critical values.
BasePlan choose_exterior_base(const std::vector<Cx>& cvs, double margin_factor) {
    Cx mu(0.0);
    for (Cx c : cvs) mu += c;
    mu /= static_cast<double>(cvs.size());
    double R = 0.0;
    for (Cx c : cvs) R = std::max(R, std::abs(c - mu));
    double scale = std::max(R, 1.0);
    double rho = 2.5 * R + 2.0 * scale;

    BasePlan best;
    double best_score = -1.0;
    for (int cand = 0; cand < 64; ++cand) {
        double alpha = kTau * static_cast<double>(cand) / 64.0 + 0.1234;
        Cx t1 = mu + rho * Cx(std::cos(alpha), std::sin(alpha));
        double score = 1e300;
        for (std::size_t k = 0; k < cvs.size(); ++k) {
            double rk = petal_radius_for(cvs, k, 0.5 * scale);
            double th = std::arg(t1 - cvs[k]);
            Cx entry = cvs[k] + rk * Cx(std::cos(th), std::sin(th));
            for (std::size_t j = 0; j < cvs.size(); ++j) {
                if (j == k) continue;
                score = std::min(score, dist_point_segment(cvs[j], t1, entry));
            }
        }
        if (score > best_score) {
            best_score = score;
            best.t1 = t1;
            best.theta_out = std::arg(t1 - mu);
        }
    }
    double min_pair = 1e300;
    for (std::size_t i = 0; i < cvs.size(); ++i)
        for (std::size_t j = i + 1; j < cvs.size(); ++j) min_pair = std::min(min_pair, std::abs(cvs[i] - cvs[j]));
    min_pair = std::min(min_pair, rho);  // distance to t1 dominates anyway
    if (cvs.size() > 1 && best_score < margin_factor * min_pair)
        throw PathTooClose("no lasso arrangement clears the safety margin");
    for (std::size_t k = 0; k < cvs.size(); ++k)
        best.petal_radii.push_back(petal_radius_for(cvs, k, 0.5 * scale));
    return best;
}

}  // namespace

MonodromyData monodromy_group(const CPoly& P, const MonodromyOptions& opt) {
    if (P.degree() < 2) throw InvalidInput("monodromy needs deg P >= 2");
    MonodromyData data;
    data.P = P;
    data.critical_values = critical_values(P);
    const auto& cvs = data.critical_values;

    BasePlan plan = choose_exterior_base(cvs, opt.margin_factor);
    data.base_point = plan.t1;

    // Fiber over the base point.
    CPoly shifted = P - CPoly::constant(plan.t1);
    data.base_fiber = aberth_roots(shifted);

    // One counter-clockwise lasso per critical value, ordered by the angle
    // seen from t1 measured from the outward ray; the ordered product is the
    // loop at infinity.
    std::vector<std::size_t> order(cvs.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> beta(cvs.size());
    for (std::size_t k = 0; k < cvs.size(); ++k)
        beta[k] = norm_angle_02pi(std::arg(cvs[k] - plan.t1) - plan.theta_out);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (beta[x] != beta[y]) return beta[x] < beta[y];
        return std::abs(cvs[x] - plan.t1) < std::abs(cvs[y] - plan.t1);
    });

    for (std::size_t idx : order) {
        auto loop = petal_polyline(plan.t1, cvs[idx], plan.petal_radii[idx], opt.circle_segments);
        data.loop_generators.push_back({cvs[idx], loop_permutation(P, loop, data.base_fiber, opt.track)});
    }

    // Independent loop at infinity.
    Cx center(0.0);
    for (Cx c : cvs) center += c;
    center /= static_cast<double>(cvs.size());
    auto big = circle_polyline(center, std::abs(plan.t1 - center), std::arg(plan.t1 - center),
                               4 * opt.circle_segments);
    data.infinity_perm = loop_permutation(P, big, data.base_fiber, opt.track);

    Permutation prod(static_cast<int>(data.base_fiber.size()));
    for (const auto& g : data.loop_generators) prod = prod.then(g.perm);
    if (prod != data.infinity_perm)
        throw TrackingBreakdown("ordered loop product disagrees with the loop at infinity");
    if (!data.infinity_perm.is_ncycle())
        throw TrackingBreakdown("loop at infinity is not a full cycle");

    std::vector<Permutation> gens;
    gens.reserve(data.loop_generators.size());
    for (const auto& g : data.loop_generators) gens.push_back(g.perm);
    data.props = group_properties(gens);
    data.group_order = group_order(gens);
    data.block_systems = block_systems(gens);

    // Sample parameters for branch-value comparisons, tracked from the base.
    double dmin = 1e300;
    for (Cx c : cvs) dmin = std::min(dmin, std::abs(plan.t1 - c));
    for (double phi : {0.9, 2.7, 4.5}) {
        Cx s = plan.t1 + 0.31 * dmin * Cx(std::cos(plan.theta_out + phi), std::sin(plan.theta_out + phi));
        data.sample_parameters.push_back(s);
        data.branch_samples.push_back(track_path(P, {plan.t1, s}, data.base_fiber, opt.track));
    }
    return data;
}

MonodromyData monodromy_group(const FPoly& P, const MonodromyOptions& opt) {
    return monodromy_group(embed_poly(P, opt.embed_precision), opt);
}

namespace {

struct RootAssociation {
    std::vector<Cx> reps;       // cluster representatives of P - t0
    std::vector<int> rep_mult;  // multiplicities
    int a_rep = -1;
    int b_rep = -1;
};

int nearest_rep(const std::vector<Cx>& reps, Cx z, double required_factor) {
    double best = 1e300, second = 1e300;
    int arg_best = -1;
    for (std::size_t m = 0; m < reps.size(); ++m) {
        double d = std::abs(z - reps[m]);
        if (d < best) {
            second = best;
            best = d;
            arg_best = static_cast<int>(m);
        } else if (d < second) {
            second = d;
        }
    }
    if (reps.size() > 1 && best * required_factor > second)
        throw AmbiguousAssociation("point does not approach a unique fiber root");
    return arg_best;
}

}  // namespace

OmegaLabeling omega_labeling(const ProblemInstance& inst, const MonodromyData& mono,
                             const MonodromyOptions& opt) {
    const int n = static_cast<int>(inst.P.degree());
    const Cx t0 = inst.t0.embed(opt.embed_precision);
    const Cx az = inst.a.embed(opt.embed_precision);
    const Cx bz = inst.b.embed(opt.embed_precision);
    const auto& cvs = mono.critical_values;
    const CPoly& P = mono.P;

    // Two-sided test of whether t0 is a critical value.
    double t_scale = std::max(1.0, std::abs(t0));
    for (Cx c : cvs) t_scale = std::max(t_scale, std::abs(c));
    double dmin = 1e300;
    for (Cx c : cvs) dmin = std::min(dmin, std::abs(c - t0));
    const double lo = 1e-9 * t_scale;
    bool t0_critical;
    if (dmin <= lo)
        t0_critical = true;
    else if (dmin >= 100.0 * lo)
        t0_critical = false;
    else
        throw AmbiguousCluster("cannot decide whether the endpoint value is critical");

    // Distance to the critical values a loop must not enclose.
    double other_min = 1e300;
    for (Cx c : cvs)
        if (std::abs(c - t0) > lo) other_min = std::min(other_min, std::abs(c - t0));
    if (other_min == 1e300) other_min = 10.0 * std::max(1.0, std::abs(t0));
    const double r = 0.1 * other_min;

    // Outgoing direction: as far in angle from every other critical value
    // as possible, with the escape ray checked against them explicitly.
    std::vector<double> cv_angles;
    for (Cx c : cvs)
        if (std::abs(c - t0) > lo) cv_angles.push_back(std::arg(c - t0));
    double maxd = r;
    for (Cx c : cvs) maxd = std::max(maxd, std::abs(c - t0));
    const double r_big = 2.0 * maxd + std::max(1.0, std::abs(t0));

    std::vector<int> cand_order(128);
    std::iota(cand_order.begin(), cand_order.end(), 0);
    std::vector<double> cand_score(128);
    for (int i = 0; i < 128; ++i) {
        double alpha = kTau * static_cast<double>(i) / 128.0 + 0.0789;
        double score = 1e300;
        for (double ca : cv_angles) {
            double d = std::abs(norm_angle_02pi(alpha - ca) - kTau / 2.0);
            score = std::min(score, kTau / 2.0 - d);  // angular distance to the ray
        }
        cand_score[static_cast<std::size_t>(i)] = score;
    }
    std::sort(cand_order.begin(), cand_order.end(),
              [&](int x, int y) { return cand_score[static_cast<std::size_t>(x)] > cand_score[static_cast<std::size_t>(y)]; });

    double margin = opt.margin_factor * std::min(r, other_min);
    Cx u(1.0, 0.0);
    bool found = false;
    for (int i : cand_order) {
        double alpha = kTau * static_cast<double>(i) / 128.0 + 0.0789;
        Cx cu(std::cos(alpha), std::sin(alpha));
        Cx ray_a = t0 + r * cu, ray_b = t0 + r_big * cu;
        double d = 1e300;
        for (Cx c : cvs)
            if (std::abs(c - t0) > lo) d = std::min(d, dist_point_segment(c, ray_a, ray_b));
        if (cv_angles.empty() || d >= margin) {
            u = cu;
            found = true;
            break;
        }
    }
    if (!found) throw PathTooClose("no escape direction clears the critical values");

    OmegaLabeling lab;
    lab.base_point = t0 + r * u;
    const Cx t1 = lab.base_point;

    CPoly shifted = P - CPoly::constant(t1);
    std::vector<Cx> fiber = aberth_roots(shifted);

    // rho1: the local loop at t0 (identity at a regular value).
    Permutation rho1(n);
    if (t0_critical) {
        auto loop = circle_polyline(t0, r, std::arg(u), opt.circle_segments);
        rho1 = loop_permutation(P, loop, fiber, opt.track);
    }

    // Loop at infinity from t1: escape along u, a full circle, return.
    std::vector<Cx> big;
    big.push_back(t1);
    auto circ = circle_polyline(t0, r_big, std::arg(u), 4 * opt.circle_segments);
    big.insert(big.end(), circ.begin(), circ.end());
    big.push_back(t1);
    Permutation sigma = loop_permutation(P, big, fiber, opt.track);
    if (!sigma.is_ncycle()) throw TrackingBreakdown("loop at infinity is not a full cycle");

    Permutation rho2 = rho1.inverse().then(sigma);

    // Branch limits toward t0 identify the vertex of every edge.
    const double delta = 1e-4 * r;
    std::vector<Cx> limits = track_path(P, {t1, t0 + delta * u}, fiber, opt.track);

    // Vertices are the distinct roots of the exact fiber polynomial; the
    // square-free part keeps the numeric root finder on simple roots.
    FPoly exact_fiber_poly = inst.P - FPoly::constant(inst.t0);
    FPoly distinct_part = square_free_part(exact_fiber_poly);
    std::vector<Cx> reps = aberth_roots(embed_poly(distinct_part, opt.embed_precision));

    const int a_rep = nearest_rep(reps, az, 10.0);
    const int b_rep = nearest_rep(reps, bz, 10.0);
    if (a_rep == b_rep) throw AmbiguousAssociation("endpoints resolved to the same fiber root");

    std::vector<int> limit_rep(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) limit_rep[static_cast<std::size_t>(j)] = nearest_rep(reps, limits[static_cast<std::size_t>(j)], 10.0);

    // The vertex clusters must be exactly the rho1 cycles.
    for (const auto& cyc : rho1.cycles(true)) {
        for (int m : cyc)
            if (limit_rep[static_cast<std::size_t>(m)] != limit_rep[static_cast<std::size_t>(cyc[0])])
                throw AmbiguousAssociation("vertex clusters disagree with the local loop cycles");
    }

    std::vector<int> a_cluster, b_cluster;
    for (int j = 0; j < n; ++j) {
        if (limit_rep[static_cast<std::size_t>(j)] == a_rep) a_cluster.push_back(j);
        if (limit_rep[static_cast<std::size_t>(j)] == b_rep) b_cluster.push_back(j);
    }
    if (a_cluster.empty() || b_cluster.empty())
        throw AmbiguousAssociation("no branch limits to an endpoint");
    lab.d_a = static_cast<long>(a_cluster.size());
    lab.d_b = static_cast<long>(b_cluster.size());

    // Canonical relabeling: sigma becomes (0 1 ... n-1), label 0 lies in the
    // cluster of a, and among those rotations take the smallest edge index k
    // whose end vertex limits to b.
    std::vector<int> orbit(static_cast<std::size_t>(n));
    orbit[0] = 0;
    for (int i = 1; i < n; ++i) orbit[static_cast<std::size_t>(i)] = sigma(orbit[static_cast<std::size_t>(i - 1)]);
    std::vector<int> pos_in_orbit(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos_in_orbit[static_cast<std::size_t>(orbit[static_cast<std::size_t>(i)])] = i;

    int best_k = n + 1, best_shift = -1;
    for (int j : a_cluster) {
        int shift = pos_in_orbit[static_cast<std::size_t>(j)];
        int k_cand = n + 1;
        for (int m : b_cluster) {
            int label = pos_in_orbit[static_cast<std::size_t>(m)] - shift;
            label = ((label % n) + n) % n;
            if (label >= 1) k_cand = std::min(k_cand, label - 1);
        }
        if (k_cand < best_k) {
            best_k = k_cand;
            best_shift = shift;
        }
    }
    if (best_shift < 0 || best_k > n) throw AmbiguousAssociation("no valid labeling rotation");
    lab.k = best_k;

    lab.branch_order.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int raw = orbit[static_cast<std::size_t>((best_shift + i) % n)];
        lab.branch_order[static_cast<std::size_t>(raw)] = i;
    }

    auto relabel = [&](const Permutation& p) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            img[static_cast<std::size_t>(lab.branch_order[static_cast<std::size_t>(j)])] =
                lab.branch_order[static_cast<std::size_t>(p(j))];
        return Permutation(std::move(img));
    };
    lab.rho1 = relabel(rho1);
    lab.rho2 = relabel(rho2);
    if (lab.rho1.then(lab.rho2) != full_cycle(n))
        throw TrackingBreakdown("labeled loops fail the full-cycle identity");

    lab.ordered_fiber.assign(static_cast<std::size_t>(n), Cx(0.0));
    for (int j = 0; j < n; ++j)
        lab.ordered_fiber[static_cast<std::size_t>(lab.branch_order[static_cast<std::size_t>(j)])] =
            fiber[static_cast<std::size_t>(j)];

    // Vertex classes are the rho1 cycles, numbered by smallest member.
    auto cycs = lab.rho1.cycles(true);
    std::sort(cycs.begin(), cycs.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
    std::vector<int> cyc_of(static_cast<std::size_t>(n));
    for (std::size_t ci = 0; ci < cycs.size(); ++ci)
        for (int m : cycs[ci]) cyc_of[static_cast<std::size_t>(m)] = static_cast<int>(ci);
    lab.edge_starts.resize(static_cast<std::size_t>(n));
    lab.edge_ends.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        lab.edge_starts[static_cast<std::size_t>(e)] = cyc_of[static_cast<std::size_t>(e)];
        lab.edge_ends[static_cast<std::size_t>(e)] = cyc_of[static_cast<std::size_t>((e + 1) % n)];
    }
    return lab;
}

BranchClasses branch_equalities(const FPoly& P, const FPoly& Q, const MonodromyData& mono,
                                const MonodromyOptions& opt) {
    (void)P;
    const int n = static_cast<int>(mono.base_fiber.size());
    CPoly Qc = embed_poly(Q, opt.embed_precision);

    std::vector<std::vector<Cx>> qv;
    double scale = 1.0;
    for (const auto& sample : mono.branch_samples) {
        std::vector<Cx> row;
        row.reserve(sample.size());
        for (Cx z : sample) {
            Cx v = Qc(z);
            scale = std::max(scale, std::abs(v));
            row.push_back(v);
        }
        qv.push_back(std::move(row));
    }
    const double tol = opt.cluster_tol * scale;

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool equal = true;
            for (const auto& row : qv) {
                double d = std::abs(row[static_cast<std::size_t>(i)] - row[static_cast<std::size_t>(j)]);
                if (d > 0.1 * tol && d < 10.0 * tol)
                    throw AmbiguousCluster("branch values fall inside the tolerance guard band");
                if (d >= 10.0 * tol) equal = false;
            }
            if (equal) parent[static_cast<std::size_t>(find(i))] = find(j);
        }

    BranchClasses out;
    std::vector<int> where(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (where[static_cast<std::size_t>(r)] < 0) {
            where[static_cast<std::size_t>(r)] = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        out.classes[static_cast<std::size_t>(where[static_cast<std::size_t>(r)])].push_back(i);
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
    out.class_count = static_cast<long>(out.classes.size());

    double max_intra = 1e-15 * scale, min_inter = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool same = find(i) == find(j);
            for (const auto& row : qv) {
                double d = std::abs(row[static_cast<std::size_t>(i)] - row[static_cast<std::size_t>(j)]);
                if (same)
                    max_intra = std::max(max_intra, d);
                else
                    min_inter = std::min(min_inter, d);
            }
        }
    out.margin = (min_inter == 1e300) ? 1e300 : min_inter / max_intra;
    return out;
}

ProofTrace proof_trace(const ProblemInstance& inst, const OmegaLabeling& labeling, long max_j,
                       const MonodromyOptions& opt) {
    const int n = static_cast<int>(labeling.ordered_fiber.size());
    CPoly Qc = embed_poly(inst.Q, opt.embed_precision);
    std::vector<Cx> x;
    x.reserve(static_cast<std::size_t>(n));
    for (Cx z : labeling.ordered_fiber) x.push_back(Qc(z));

    ProofTrace trace;
    const long o1 = labeling.rho1.order();
    const int k1 = (labeling.k + 1) % n;

    for (long j = 1; j <= max_j; ++j) {
        Cx lhs(0.0), rhs(0.0);
        double mag = 1.0;
        int e = k1, s = 0;
        for (long f = 0; f < o1; ++f) {
            Cx xe = std::pow(x[static_cast<std::size_t>(e)], static_cast<double>(j));
            Cx xs = std::pow(x[static_cast<std::size_t>(s)], static_cast<double>(j));
            lhs += xe;
            rhs += xs;
            mag = std::max({mag, std::abs(xe), std::abs(xs)});
            e = labeling.rho1(e);
            s = labeling.rho1(s);
        }
        TraceCheck chk;
        chk.j = j;
        chk.lhs_abs = std::abs(lhs);
        chk.residual = std::abs(lhs - rhs);
        chk.pass = chk.residual <= 1e-7 * mag;
        trace.power_identities.push_back(chk);
    }

    // Vandermonde over the distinct branches clustered at a and at b.
    std::vector<int> idx;
    for (const auto& cyc : labeling.rho1.cycles(true)) {
        bool hit = false;
        for (int m : cyc)
            if (m == 0 || m == k1) hit = true;
        if (hit)
            for (int m : cyc) idx.push_back(m);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    trace.vandermonde_dim = static_cast<int>(idx.size());

    double min_gap = 1e300, vscale = 1.0;
    for (std::size_t i = 0; i < idx.size(); ++i) vscale = std::max(vscale, std::abs(x[static_cast<std::size_t>(idx[i])]));
    Cx detc(1.0);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            Cx diff = x[static_cast<std::size_t>(idx[j])] - x[static_cast<std::size_t>(idx[i])];
            detc *= diff;
            min_gap = std::min(min_gap, std::abs(diff));
        }
    trace.vandermonde_abs_det = std::abs(detc);
    trace.min_value_gap = (min_gap == 1e300) ? 0.0 : min_gap;
    trace.vandermonde_singular = trace.min_value_gap <= 1e-6 * vscale;

    long needed = labeling.d_a + labeling.d_b - 1;
    bool identities_hold = true;
    for (const auto& chk : trace.power_identities)
        if (chk.j <= needed && !chk.pass) identities_hold = false;
    trace.branch_equality_forced = identities_hold && trace.vandermonde_singular;
    return trace;
}

bool lemma2_check(const FPoly& P, const FPoly& Q, const std::vector<FieldElement>& coefficients,
                  const MonodromyData& mono, const MonodromyOptions& opt) {
    const std::size_t n = mono.base_fiber.size();
    if (coefficients.size() != n) throw InvalidInput("one coefficient per branch required");
    bool all_equal = true;
    for (const auto& c : coefficients)
        if (!(c == coefficients[0])) all_equal = false;
    if (all_equal) throw PreconditionUnverified("coefficients must not be all equal");
    if (!mono.props.doubly_transitive)
        throw PreconditionUnverified("monodromy group is not doubly transitive");

    CPoly Qc = embed_poly(Q, opt.embed_precision);
    for (const auto& sample : mono.branch_samples) {
        Cx acc(0.0);
        double scale = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            Cx term = coefficients[i].embed(opt.embed_precision) * Qc(sample[i]);
            acc += term;
            scale = std::max(scale, std::abs(term));
        }
        if (std::abs(acc) > 1e-7 * scale)
            throw PreconditionUnverified("branch relation does not hold numerically");
    }

    return wadic_expand(Q, P).all_digits_constant();
}

}  // namespace pmp
