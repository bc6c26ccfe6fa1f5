#ifndef PMP_POLY_HPP
#define PMP_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "pmp/errors.hpp"

namespace pmp {

// Scalar hooks. Generic rings construct constants from int directly;
// scalars that carry runtime context (field elements) overload these.
template <class T>
T ring_zero(const T&) {
    return T(0);
}

template <class T>
T ring_from_int(const T&, long v) {
    return T(v);
}

/// Dense univariate polynomial, coefficients ascending, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1.
template <class T>
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { prune(); }

    static Poly constant(T c) {
        Poly p;
        p.coeffs_.push_back(std::move(c));
        p.prune();
        return p;
    }

    // c * z^k
    static Poly monomial(T c, std::size_t k) {
        if (is_scalar_zero(c)) return Poly();
        Poly p;
        p.coeffs_.assign(k, ring_zero(c));
        p.coeffs_.push_back(std::move(c));
        return p;
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<T>& coeffs() const { return coeffs_; }

    // Coefficient of z^i, zero beyond the degree.
    T coeff(std::size_t i) const {
        if (i < coeffs_.size()) return coeffs_[i];
        if (!coeffs_.empty()) return ring_zero(coeffs_[0]);
        return T(0);
    }

    const T& leading() const {
        if (coeffs_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool operator==(const Poly& rhs) const {
        if (coeffs_.size() != rhs.coeffs_.size()) return false;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!(coeffs_[i] == rhs.coeffs_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly operator+(const Poly& rhs) const {
        const auto& a = coeffs_;
        const auto& b = rhs.coeffs_;
        std::vector<T> out;
        out.reserve(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            if (i < a.size() && i < b.size())
                out.push_back(a[i] + b[i]);
            else if (i < a.size())
                out.push_back(a[i]);
            else
                out.push_back(b[i]);
        }
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& rhs) const { return *this + (-rhs); }

    Poly operator*(const Poly& rhs) const {
        if (is_zero() || rhs.is_zero()) return Poly();
        const auto& a = coeffs_;
        const auto& b = rhs.coeffs_;
        std::vector<T> out(a.size() + b.size() - 1, ring_zero(a[0]));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
        return Poly(std::move(out));
    }

    Poly operator*(const T& s) const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = c * s;
        r.prune();
        return r;
    }

    Poly operator/(const T& s) const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = c / s;
        return r;
    }

    T operator()(const T& x) const {
        if (coeffs_.empty()) return ring_zero(x);
        T acc = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<T> out;
        out.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out.push_back(coeffs_[i] * ring_from_int(coeffs_[i], static_cast<long>(i)));
        return Poly(std::move(out));
    }

    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        if (coeffs_.empty()) return Poly();
        std::vector<T> out;
        out.reserve(coeffs_.size() + 1);
        out.push_back(ring_zero(coeffs_[0]));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out.push_back(coeffs_[i] / ring_from_int(coeffs_[i], static_cast<long>(i + 1)));
        return Poly(std::move(out));
    }

    Poly pow(unsigned long e) const {
        if (e == 0) {
            if (coeffs_.empty()) throw InvalidInput("0^0 polynomial power");
            return constant(ring_from_int(coeffs_[0], 1));
        }
        Poly acc = *this;
        for (unsigned long i = 1; i < e; ++i) acc = acc * *this;
        return acc;
    }

    template <class F>
    auto map(F&& f) const -> Poly<decltype(f(std::declval<T>()))> {
        using U = decltype(f(std::declval<T>()));
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return Poly<U>(std::move(out));
    }

   private:
    static bool is_scalar_zero(const T& c) { return c == ring_zero(c); }

    void prune() {
        while (!coeffs_.empty() && is_scalar_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& p) {
    return p * s;
}

/// outer(inner(z)), exact Horner composition.
template <class T>
Poly<T> compose(const Poly<T>& outer, const Poly<T>& inner) {
    if (outer.is_zero()) return Poly<T>();
    Poly<T> acc = Poly<T>::constant(outer.coeffs().back());
    for (std::size_t i = outer.coeffs().size() - 1; i-- > 0;)
        acc = acc * inner + Poly<T>::constant(outer.coeffs()[i]);
    return acc;
}

// Euclidean division; requires invertible leading coefficient (field scalars).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& num, const Poly<T>& den) {
    if (den.is_zero()) throw InvalidInput("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly<T>(), num};
    std::vector<T> rem(num.coeffs());
    const auto& d = den.coeffs();
    const T lead = den.leading();
    const std::size_t dn = d.size();
    std::vector<T> quot(rem.size() - dn + 1, ring_zero(lead));
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        T q = rem[shift + dn - 1] / lead;
        if (!(q == ring_zero(q))) {
            quot[shift] = q;
            for (std::size_t j = 0; j < dn; ++j) rem[shift + j] = rem[shift + j] - q * d[j];
        }
    }
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

// Monic gcd over a field scalar.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a / a.leading();
    return a;
}

/// Same distinct roots, all simple.
template <class T>
Poly<T> square_free_part(const Poly<T>& p) {
    if (p.degree() <= 1) return p;
    Poly<T> g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return divmod(p, g).first;
}

/// Base-w expansion p = sum digits[i] * w^i with deg(digit) < deg(w).
/// All digits constant certifies p = outer(w) for the extracted outer.
template <class T>
struct WadicExpansion {
    Poly<T> base;
    std::vector<Poly<T>> digits;

    bool all_digits_constant() const {
        for (const auto& d : digits)
            if (d.degree() > 0) return false;
        return true;
    }

    // Valid only when all_digits_constant(); digit constants become outer coefficients.
    Poly<T> outer() const {
        std::vector<T> cs;
        cs.reserve(digits.size());
        for (const auto& d : digits) cs.push_back(d.is_zero() ? ring_zero(base.leading()) : d.coeffs()[0]);
        return Poly<T>(std::move(cs));
    }

    Poly<T> reconstruct() const {
        Poly<T> acc;
        for (std::size_t i = digits.size(); i-- > 0;) acc = acc * base + digits[i];
        return acc;
    }
};

template <class T>
WadicExpansion<T> wadic_expand(const Poly<T>& p, const Poly<T>& w) {
    if (w.degree() < 1) throw InvalidInput("expansion base must be nonconstant");
    WadicExpansion<T> e;
    e.base = w;
    Poly<T> cur = p;
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, w);
        e.digits.push_back(r);
        cur = q;
    }
    if (e.digits.empty()) e.digits.push_back(Poly<T>());
    return e;
}

/// Polynomial part (minus the constant term) of the r-th root of a monic p
/// at infinity: the unique monic w with deg w = deg p / r and w(0) = 0 such
/// that p^(1/r) = w + c + O(1/z). Coefficients come from the series identity
/// r * f * s' = s * f' applied to the reversed polynomial f.
template <class T>
Poly<T> series_rth_root(const Poly<T>& p, unsigned long r) {
    if (p.is_zero() || p.degree() < 1) throw InvalidInput("root of a constant polynomial");
    const T one = ring_from_int(p.leading(), 1);
    if (!(p.leading() == one)) throw NotMonic("series r-th root requires a monic polynomial");
    if (r < 2) throw InvalidInput("root order must be at least 2");
    const auto n = static_cast<unsigned long>(p.degree());
    if (n % r != 0) throw DegreeNotDivisible("degree not divisible by root order");
    const unsigned long m = n / r;

    // f_k = coefficient of z^(n-k); f_0 = 1.
    auto f = [&](unsigned long k) { return p.coeff(n - k); };
    std::vector<T> s;
    s.reserve(m + 1);
    s.push_back(one);
    const T zero = ring_zero(one);
    // r*k*s_k = sum_{j<k} (k-j) * (s_j f_{k-j} - r f_j s_{k-j}), the f_j term for j >= 1.
    for (unsigned long k = 1; k <= m; ++k) {
        T acc = zero;
        for (unsigned long j = 0; j < k; ++j) {
            T kmj = ring_from_int(one, static_cast<long>(k - j));
            acc = acc + s[j] * kmj * f(k - j);
            if (j >= 1) acc = acc - ring_from_int(one, static_cast<long>(r)) * f(j) * kmj * s[k - j];
        }
        s.push_back(acc / (ring_from_int(one, static_cast<long>(r)) * ring_from_int(one, static_cast<long>(k))));
    }

    // w = z^m + s_1 z^(m-1) + ... + s_{m-1} z  (constant term dropped)
    std::vector<T> w(m + 1, zero);
    for (unsigned long i = 0; i + 1 <= m; ++i) w[m - i] = s[i];
    w[0] = zero;
    return Poly<T>(std::move(w));
}

}  // namespace pmp

#endif
