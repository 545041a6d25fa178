#pragma once

// Exact Gaussian rationals a + b*i with a, b arbitrary-precision rationals.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadrics {

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar rational(long num, long den = 1) {
        if (den == 0) throw std::domain_error("zero denominator");
        return Scalar(mpq_class(num, den));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// a^2 + b^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        mpq_class n = norm();
        return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
    }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Serialized form: "a/b", "c/d i", "a/b+c/d i", "0".
    std::string to_string() const {
        const bool has_re = sgn(re_) != 0;
        const bool has_im = sgn(im_) != 0;
        if (!has_re && !has_im) return "0";
        std::string out;
        if (has_re) out = re_.get_str();
        if (has_im) {
            std::string m = im_.get_str();
            if (has_re && sgn(im_) > 0) out += "+";
            out += m + " i";
        }
        return out;
    }

    /// Accepts the serialized form as well as DSL literals: "3", "-1/2", "i", "-i", "2+3i", "1/2-3/4 i".
    static Scalar parse(std::string_view text);

    std::size_t hash() const {
        std::size_t h = std::hash<std::string>{}(re_.get_str());
        return h ^ (std::hash<std::string>{}(im_.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace detail {

inline mpq_class parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    for (char c : str)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
    if (str.find('/') != std::string::npos) {
        auto slash = str.find('/');
        if (str.substr(slash + 1) == "0" || str.substr(slash + 1).find_first_not_of('0') == std::string::npos)
            throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    }
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

// One signed component: "3", "-1/2", "i", "-i", "3i", "3/4 i".
inline Scalar parse_component(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty scalar component");
    if (t.back() == 'i') {
        t.pop_back();
        if (t.empty() || t == "+") return Scalar::i();
        if (t == "-") return -Scalar::i();
        return Scalar(mpq_class(0), parse_rational(t));
    }
    return Scalar(parse_rational(t));
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t.push_back(c);
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if (t.empty()) throw std::invalid_argument("empty scalar literal");
    // split at a sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < t.size(); ++k)
        if (t[k] == '+' || t[k] == '-') split = k;
    if (split == std::string::npos) return detail::parse_component(t);
    Scalar a = detail::parse_component(t.substr(0, split));
    Scalar b = detail::parse_component(t.substr(split));
    if (!a.is_real() || sgn(b.re()) != 0 || b.is_zero())
        throw std::invalid_argument("scalar literal must be <real>+<imag>i: '" + std::string(text) + "'");
    return a + b;
}

/// Exact square root of a non-negative rational, if it is a rational square.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

/// A square root inside Q(i), if one exists.
inline std::optional<Scalar> sqrt_exact(const Scalar& z) {
    if (z.is_zero()) return Scalar(0);
    auto modulus = rational_sqrt(z.norm());
    if (!modulus) return std::nullopt;
    // (x + yi)^2 = a + bi  =>  x^2 = (|z| + a)/2, y^2 = (|z| - a)/2
    mpq_class x2 = (*modulus + z.re()) / 2;
    mpq_class y2 = (*modulus - z.re()) / 2;
    auto x = rational_sqrt(x2);
    auto y = rational_sqrt(y2);
    if (!x || !y) return std::nullopt;
    mpq_class yy = *y;
    if (sgn(z.im()) < 0) yy = -yy;
    Scalar r(*x, yy);
    if (r * r != z) return std::nullopt;
    return r;
}

}  // namespace quadrics

template <>
struct std::hash<quadrics::Scalar> {
    std::size_t operator()(const quadrics::Scalar& s) const { return s.hash(); }
};
