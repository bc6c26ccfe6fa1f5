#include "pmp/puiseux.hpp"

#include <cmath>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

// Truncated power series over the field, length = order + 1.
using Series = std::vector<FieldElement>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series out(len, ring_zero(a[0]));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

// Inverse of a series with invertible constant term.
Series series_inv(const Series& a, std::size_t len) {
    Series out(len, ring_zero(a[0]));
    FieldElement c0inv = ring_from_int(a[0], 1) / a[0];
    out[0] = c0inv;
    for (std::size_t k = 1; k < len; ++k) {
        FieldElement acc = ring_zero(a[0]);
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc = acc + a[j] * out[k - j];
        out[k] = -(acc * c0inv);
    }
    return out;
}

}  // namespace

std::complex<double> PuiseuxSeries::coefficient(long k) const {
    for (const auto& [kk, v] : coefficients)
        if (kk == k) return v;
    return {0.0, 0.0};
}

std::vector<std::pair<long, std::complex<double>>> PuiseuxSeries::branch(long i) const {
    std::vector<std::pair<long, std::complex<double>>> out;
    out.reserve(coefficients.size());
    for (const auto& [k, v] : coefficients) {
        long e = ((i * k) % ramification + ramification) % ramification;
        std::complex<double> w =
            std::exp(std::complex<double>(0.0, 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(ramification)));
        out.emplace_back(k, v * w);
    }
    return out;
}

PuiseuxSeries puiseux_at_infinity(const FPoly& P, const FPoly& Q, long terms, int precision_bits) {
    if (terms < 1) throw InvalidInput("at least one term required");
    if (P.degree() < 1) throw InvalidInput("P must be nonconstant");
    FPoly pm = P / P.leading();
    const long n = pm.degree();
    const long m = Q.is_zero() ? 0 : Q.degree();

    // Solve s(u)^n + sum_j p_j u^(n-j) s(u)^j = 1 for s with s(0) = 1; then
    // the principal branch of P^-1 at infinity is w = t^(1/n) s(t^(-1/n)).
    const std::size_t len = static_cast<std::size_t>(terms + std::max(m, 1L)) + 2;
    const FieldElement one = ring_from_int(pm.leading(), 1);
    const FieldElement zero = ring_zero(one);

    // Newton iteration on the series ring with explicit power bookkeeping.
    Series s(len, zero);
    s[0] = one;
    const std::size_t rounds = 2 + static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(len))));
    for (std::size_t round = 0; round < rounds; ++round) {
        // Compute F(s) and F'(s) together.
        Series F(len, zero), dF(len, zero);
        Series spow(len, zero);
        spow[0] = one;
        for (long j = 0; j <= n; ++j) {
            const FieldElement pj = pm.coeff(static_cast<std::size_t>(j));
            const std::size_t shift = static_cast<std::size_t>(n - j);
            if (!pj.is_zero()) {
                for (std::size_t i = 0; i + shift < len; ++i) F[i + shift] = F[i + shift] + pj * spow[i];
            }
            if (j + 1 <= n) {
                // accumulate derivative contribution (j+1) p_{j+1} u^{n-j-1} s^j
                const FieldElement pj1 = pm.coeff(static_cast<std::size_t>(j + 1));
                if (!pj1.is_zero()) {
                    const FieldElement c = pj1 * ring_from_int(one, j + 1);
                    const std::size_t shift2 = static_cast<std::size_t>(n - j - 1);
                    for (std::size_t i = 0; i + shift2 < len; ++i) dF[i + shift2] = dF[i + shift2] + c * spow[i];
                }
                spow = series_mul(spow, s, len);
            }
        }
        F[0] = F[0] - one;
        bool zero_F = true;
        for (const auto& c : F)
            if (!c.is_zero()) {
                zero_F = false;
                break;
            }
        if (zero_F) break;
        Series corr = series_mul(F, series_inv(dF, len), len);
        for (std::size_t i = 0; i < len; ++i) s[i] = s[i] - corr[i];
    }

    // Q(w) = sum_r q_r t^(r/n) s(u)^r; the coefficient of t^(k/n) collects
    // (s^r)_{r-k} over r >= max(0, k).
    std::vector<Series> s_powers(static_cast<std::size_t>(m) + 1);
    s_powers[0] = Series(len, zero);
    s_powers[0][0] = one;
    for (long r = 1; r <= m; ++r) s_powers[static_cast<std::size_t>(r)] = series_mul(s_powers[static_cast<std::size_t>(r - 1)], s, len);

    PuiseuxSeries out;
    out.ramification = n;
    out.branch_shift = std::exp(std::complex<double>(0.0, 2.0 * M_PI / static_cast<double>(n)));
    for (long k = m; k > m - terms; --k) {
        FieldElement acc = zero;
        for (long r = std::max(0L, k); r <= m; ++r) {
            const FieldElement qr = Q.coeff(static_cast<std::size_t>(r));
            if (qr.is_zero()) continue;
            const std::size_t l = static_cast<std::size_t>(r - k);
            if (l < len) acc = acc + qr * s_powers[static_cast<std::size_t>(r)][l];
        }
        out.coefficients.emplace_back(k, acc.embed(precision_bits));
    }
    return out;
}

}  // namespace pmp
