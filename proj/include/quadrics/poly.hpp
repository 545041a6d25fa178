#pragma once

// Dense univariate polynomials over Q(i) and a bounded factorizer that pulls
// out every linear factor over Q(i) (rational root search over Z[i]).

#include "matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace quadrics {

class Poly {
public:
    Poly() = default;
    explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Scalar& a) { return Poly(Vec{a}); }
    /// t - root
    static Poly linear(const Scalar& root) { return Poly(Vec{-root, Scalar(1)}); }
    static Poly monomial(std::size_t degree, const Scalar& a = Scalar(1)) {
        Vec v(degree + 1);
        v[degree] = a;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; the zero polynomial reports -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Vec& coeffs() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const Scalar& leading() const { return c_.back(); }

    Poly derivative() const {
        Vec d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * c_[k]);
        return Poly(std::move(d));
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly monic() const {
        if (is_zero()) return *this;
        Scalar inv = leading().inverse();
        Vec v = c_;
        for (auto& x : v) x *= inv;
        return Poly(std::move(v));
    }

    Scalar operator()(const Scalar& t) const {
        Scalar acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Vec v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Vec v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Vec v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Scalar& s, const Poly& p) { return Poly::constant(s) * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long k = degree(); k >= 0; --k) {
            const Scalar& a = c_[static_cast<std::size_t>(k)];
            if (a.is_zero()) continue;
            std::string coef = a.to_string();
            const bool compound = !a.is_real() && sgn(a.re()) != 0;
            if (compound) coef = "(" + coef + ")";
            bool negative = !compound && coef.front() == '-';
            if (negative) coef.erase(0, 1);
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (k == 0) {
                os << coef;
                continue;
            }
            if (coef != "1") os << coef << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Vec c_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

inline PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Vec r = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    Vec q(static_cast<std::size_t>(a.degree() - db + 1));
    Scalar inv = b.leading().inverse();
    for (long k = a.degree(); k >= db; --k) {
        Scalar f = r[static_cast<std::size_t>(k)] * inv;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(k - db)] = f;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

/// Monic gcd.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.monic();
    }
    return a.monic();
}

struct Bezout {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b = g
};

inline Bezout extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.leading().inverse();
    return {r0.monic(), inv * s0, inv * t0};
}

struct Factorization {
    std::vector<std::pair<Poly, int>> factors;  // monic, degree <= 2
    Poly remainder;                             // monic, no linear factor over Q(i)

    Poly expand() const {
        Poly p = remainder;
        for (const auto& [f, m] : factors)
            for (int k = 0; k < m; ++k) p = p * f;
        return p;
    }
};

namespace detail {

// Complex number with GMP floating-point parts at a fixed precision.
struct ComplexF {
    mpf_class re, im;
    ComplexF(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
    ComplexF(const mpf_class& r, const mpf_class& i, mp_bitcnt_t prec) : re(r, prec), im(i, prec) {}
};

inline ComplexF cmul(const ComplexF& a, const ComplexF& b, mp_bitcnt_t prec) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, prec};
}

inline ComplexF cdiv(const ComplexF& a, const ComplexF& b, mp_bitcnt_t prec) {
    mpf_class n(b.re * b.re + b.im * b.im, prec);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n, prec};
}

inline std::size_t bit_size(const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline mpz_class round_to_integer(const mpf_class& x, mp_bitcnt_t prec) {
    mpf_class shifted(x + 0.5, prec);
    mpf_class fl(0, prec);
    mpf_floor(fl.get_mpf_t(), shifted.get_mpf_t());
    mpz_class out;
    mpz_set_f(out.get_mpz_t(), fl.get_mpf_t());
    return out;
}

}  // namespace detail

/// Roots in Q(i) of a nonzero polynomial, without multiplicity. The roots of the
/// squarefree part are approximated (Durand-Kerner at a precision scaled to the
/// coefficient sizes); L * root is a Gaussian integer for L the common denominator of
/// the monic coefficients, so each approximation is rounded and then checked exactly.
inline std::vector<Scalar> gaussian_roots(const Poly& input) {
    if (input.is_zero()) throw std::invalid_argument("gaussian_roots of the zero polynomial");
    std::vector<Scalar> out;
    if (input.degree() <= 0) return out;
    Poly p = divmod(input, gcd(input, input.derivative())).quotient.monic();
    const long n = p.degree();
    if (n == 1) return {-p.coeff(0)};
    if (n == 2) {
        const Scalar b = p.coeff(1), c = p.coeff(0);
        if (auto root = sqrt_exact(b * b - Scalar(4) * c)) {
            const Scalar half = Scalar::rational(1, 2);
            return {half * (-b + *root), half * (-b - *root)};
        }
        return out;
    }
    mpz_class lcm = 1;
    std::size_t bits = 0;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
        bits = std::max({bits, detail::bit_size(c.re()), detail::bit_size(c.im())});
    }
    const mp_bitcnt_t prec = 128 + 4 * (bits + mpz_sizeinbase(lcm.get_mpz_t(), 2)) + 8 * static_cast<mp_bitcnt_t>(n);
    std::vector<detail::ComplexF> a;
    mpf_class radius(1, prec);
    for (long k = 0; k <= n; ++k) {
        a.emplace_back(mpf_class(p.coeff(k).re(), prec), mpf_class(p.coeff(k).im(), prec), prec);
        if (k < n) radius = std::max(radius, mpf_class(1 + abs(a.back().re) + abs(a.back().im), prec));
    }
    auto eval = [&](const detail::ComplexF& z) {
        detail::ComplexF v = a[n];
        for (long k = n - 1; k >= 0; --k) {
            v = detail::cmul(v, z, prec);
            v.re += a[k].re;
            v.im += a[k].im;
        }
        return v;
    };
    // cheap double-precision pass gives the starting points for the exact-precision pass
    std::vector<std::complex<double>> approx;
    {
        std::vector<std::complex<double>> ad;
        bool finite = true;
        for (long k = 0; k <= n; ++k) {
            ad.emplace_back(p.coeff(k).re().get_d(), p.coeff(k).im().get_d());
            finite = finite && std::isfinite(ad.back().real()) && std::isfinite(ad.back().imag());
        }
        double r = 1;
        for (long k = 0; k < n; ++k) r = std::max(r, 1 + std::abs(ad[k]));
        std::complex<double> w(r, 0);
        for (long k = 0; k < n && finite; ++k, w *= std::complex<double>(0.4, 0.9)) approx.push_back(w);
        for (int iter = 0; iter < 500 && finite; ++iter) {
            double worst = 0;
            for (long k = 0; k < n; ++k) {
                std::complex<double> v = ad[n], den = 1;
                for (long j = n - 1; j >= 0; --j) v = v * approx[k] + ad[j];
                for (long j = 0; j < n; ++j)
                    if (j != k) den *= approx[k] - approx[j];
                if (den == std::complex<double>(0)) continue;
                const std::complex<double> delta = v / den;
                approx[k] -= delta;
                worst = std::max(worst, std::abs(delta) / (1 + std::abs(approx[k])));
            }
            if (worst < 1e-14) break;
        }
        for (const auto& c : approx)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) finite = false;
        if (!finite) approx.clear();
    }
    std::vector<detail::ComplexF> z;
    if (!approx.empty()) {
        for (const auto& c : approx) z.emplace_back(mpf_class(c.real(), prec), mpf_class(c.imag(), prec), prec);
    } else {
        const detail::ComplexF seed(mpf_class(0.4, prec), mpf_class(0.9, prec), prec);
        detail::ComplexF w(radius, mpf_class(0, prec), prec);
        for (long k = 0; k < n; ++k) {
            z.push_back(w);
            w = detail::cmul(w, seed, prec);
        }
    }
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 32);
    for (int iter = 0; iter < 2000; ++iter) {
        bool moved = false;
        for (long k = 0; k < n; ++k) {
            detail::ComplexF den(mpf_class(1, prec), mpf_class(0, prec), prec);
            for (long j = 0; j < n; ++j)
                if (j != k) {
                    detail::ComplexF diff(z[k].re - z[j].re, z[k].im - z[j].im, prec);
                    den = detail::cmul(den, diff, prec);
                }
            if (den.re == 0 && den.im == 0) continue;
            detail::ComplexF delta = detail::cdiv(eval(z[k]), den, prec);
            z[k].re -= delta.re;
            z[k].im -= delta.im;
            if (abs(delta.re) + abs(delta.im) > tol * (1 + abs(z[k].re) + abs(z[k].im))) moved = true;
        }
        if (!moved) break;
    }
    const mpf_class scale(lcm, prec);
    for (const auto& root : z) {
        mpf_class sr(root.re * scale, prec), si(root.im * scale, prec);
        Scalar r(mpq_class(detail::round_to_integer(sr, prec), lcm), mpq_class(detail::round_to_integer(si, prec), lcm));
        if (p(r).is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

/// Extracts every monic linear factor over Q(i). A root-free quadratic left over
/// is reported as an irreducible quadratic factor; anything of higher degree stays
/// in the remainder.
inline Factorization factor_small(const Poly& input) {
    if (input.is_zero()) throw std::invalid_argument("factor_small of the zero polynomial");
    Factorization out;
    Poly p = input.monic();
    int zero_mult = 0;
    while (p.degree() > 0 && p.coeff(0).is_zero()) {
        p = divmod(p, Poly::monomial(1)).quotient;
        ++zero_mult;
    }
    if (zero_mult > 0) out.factors.emplace_back(Poly::monomial(1), zero_mult);
    if (p.degree() > 0) {
        for (const Scalar& r : gaussian_roots(p)) {
            int mult = 0;
            while (p.degree() > 0 && p(r).is_zero()) {
                p = divmod(p, Poly::linear(r)).quotient;
                ++mult;
            }
            if (mult > 0) out.factors.emplace_back(Poly::linear(r), mult);
            if (p.degree() <= 0) break;
        }
    }
    if (p.degree() == 2) {
        out.factors.emplace_back(p, 1);
        p = Poly::constant(1);
    }
    out.remainder = p;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.to_string() < b.first.to_string();
    });
    return out;
}

}  // namespace quadrics
