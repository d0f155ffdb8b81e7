#pragma once

#include <optional>
#include <string>

#include "modelkit/rational.hpp"

namespace modelkit {

// Gaussian rational a + b*i with exact rational parts.
struct GQ {
    Rational re;
    Rational im;

    GQ() = default;
    GQ(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GQ(long n) : re(n) {}                 // NOLINT(google-explicit-constructor)
    GQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GQ i() { return GQ(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GQ conj() const { return GQ(re, -im); }
    Rational norm() const { return re * re + im * im; }

    GQ operator-() const { return GQ(-re, -im); }
    GQ& operator+=(const GQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GQ& operator-=(const GQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(const GQ& a, const GQ& b) {
        return GQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GQ& operator*=(const GQ& o) { return *this = *this * o; }
    friend GQ operator/(const GQ& a, const GQ& b) {
        Rational n = b.norm();
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        GQ c = a * b.conj();
        return GQ(c.re / n, c.im / n);
    }
    GQ& operator/=(const GQ& o) { return *this = *this / o; }

    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
    friend bool operator<(const GQ& a, const GQ& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

// Square root in Q(i), when it exists.
inline std::optional<GQ> gaussian_sqrt(const GQ& z) {
    if (z.is_zero()) return GQ(0);
    // (x+iy)^2 = z needs x^2 - y^2 = re, 2xy = im and x^2 + y^2 = sqrt(norm).
    auto n = rational_sqrt(z.norm());
    if (!n) return std::nullopt;
    auto x2 = (z.re + *n) / 2;
    auto x = rational_sqrt(x2);
    if (!x) return std::nullopt;
    if (*x == 0) {
        auto y = rational_sqrt(-z.re);
        if (!y) return std::nullopt;
        return GQ(Rational(0), *y);
    }
    Rational y = z.im / (2 * *x);
    return GQ(*x, y);
}

inline std::string gq_to_string(const GQ& z) {
    if (z.im == 0) return rat_to_string(z.re);
    std::string im_part;
    if (z.im == 1)
        im_part = "i";
    else if (z.im == -1)
        im_part = "-i";
    else
        im_part = rat_to_string(z.im) + "*i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return rat_to_string(z.re) + "+" + im_part;
    return rat_to_string(z.re) + im_part;
}

}  // namespace modelkit
