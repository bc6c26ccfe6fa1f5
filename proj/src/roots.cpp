#include "pmp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

using Cx = std::complex<double>;

// Evaluation together with the running magnitude bound sum |a_i| |z|^i,
// the natural scale for a backward-error stopping test.
std::pair<Cx, double> eval_with_scale(const std::vector<Cx>& a, Cx z) {
    Cx v = a.back();
    double s = std::abs(a.back());
    const double az = std::abs(z);
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        v = v * z + a[i];
        s = s * az + std::abs(a[i]);
    }
    return {v, s};
}

}  // namespace

std::vector<Cx> aberth_roots(const Poly<Cx>& p, const RootsOptions& opt) {
    if (p.degree() < 1) throw InvalidInput("root finding needs a nonconstant polynomial");

    std::vector<Cx> a = p.coeffs();

    // Deflate exact zero roots first; they would otherwise stall the iteration.
    std::size_t zero_roots = 0;
    while (zero_roots < a.size() - 1 && a[zero_roots] == Cx(0.0)) ++zero_roots;
    a.erase(a.begin(), a.begin() + static_cast<long>(zero_roots));

    const std::size_t n = a.size() - 1;
    std::vector<Cx> z;
    z.reserve(n + zero_roots);

    if (n > 0) {
        // Initial points on a circle at the Cauchy bound, angle-offset to
        // avoid symmetry lock-in.
        double radius = 0.0;
        for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i] / a[n]));
        radius = 1.0 + radius;
        z.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) + 0.3763 +
                        M_PI / (2.0 * static_cast<double>(n));
            z[j] = 0.5 * radius * Cx(std::cos(th), std::sin(th));
        }

        std::vector<Cx> ap;
        ap.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) ap.push_back(a[i] * static_cast<double>(i));

        std::vector<bool> done(n, false);
        bool all_done = false;
        for (int iter = 0; iter < opt.max_iter && !all_done; ++iter) {
            all_done = true;
            for (std::size_t j = 0; j < n; ++j) {
                auto [pv, scale] = eval_with_scale(a, z[j]);
                if (std::abs(pv) <= opt.tol * std::max(scale, 1e-300)) {
                    done[j] = true;
                    continue;
                }
                all_done = false;
                Cx dv = eval_with_scale(ap, z[j]).first;
                Cx w = (dv == Cx(0.0)) ? Cx(0.0) : pv / dv;
                Cx sum(0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j) continue;
                    Cx d = z[j] - z[k];
                    if (d == Cx(0.0)) d = Cx(1e-14, 1e-14);
                    sum += 1.0 / d;
                }
                Cx denom = 1.0 - w * sum;
                Cx step = (denom == Cx(0.0)) ? w : w / denom;
                if (dv == Cx(0.0)) {
                    // At a stationary point; nudge off it.
                    step = Cx(1e-6 * (1.0 + std::abs(z[j])), 1e-6);
                }
                z[j] -= step;
            }
        }
        if (!all_done) {
            for (std::size_t j = 0; j < n; ++j) {
                auto [pv, scale] = eval_with_scale(a, z[j]);
                if (std::abs(pv) > opt.tol * std::max(scale, 1e-300))
                    throw NoConvergence("root iteration did not converge");
            }
        }
    }

    for (std::size_t i = 0; i < zero_roots; ++i) z.push_back(Cx(0.0));
    return z;
}

std::vector<RootCluster> roots_numeric(const Poly<Cx>& p, const RootsOptions& opt) {
    std::vector<Cx> z = aberth_roots(p, opt);
    const std::size_t n = z.size();

    // Union-find merge of points within the cluster radius.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double r = opt.cluster_radius * std::max(1.0, std::max(std::abs(z[i]), std::abs(z[j])));
            if (std::abs(z[i] - z[j]) <= r) parent[find(i)] = find(j);
        }

    std::vector<RootCluster> out;
    std::vector<long> where(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (where[r] < 0) {
            where[r] = static_cast<long>(out.size());
            out.push_back({Cx(0.0), 0});
        }
        auto& c = out[static_cast<std::size_t>(where[r])];
        c.value += z[i];
        c.multiplicity += 1;
    }
    for (auto& c : out) c.value /= static_cast<double>(c.multiplicity);

    // Deterministic order.
    std::sort(out.begin(), out.end(), [](const RootCluster& x, const RootCluster& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

}  // namespace pmp
