#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "modelkit/gaussian.hpp"

namespace modelkit {

// Basis of the right kernel of a rational matrix (rows x cols), by exact
// Gauss-Jordan elimination. Basis vectors follow the free-column order.
inline std::vector<std::vector<Rational>> rational_kernel(
    std::vector<std::vector<Rational>> m, std::size_t cols) {
    for (auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Primitive integer vector proportional to a rational (a, b), with the first
// nonzero entry positive.
inline std::array<BigInt, 2> primitive_integer_vector(const Rational& a, const Rational& b) {
    BigInt na = rat_num(a), da = rat_den(a);
    BigInt nb = rat_num(b), db = rat_den(b);
    BigInt x = na * db, y = nb * da;  // common denominator da*db
    if (x == 0 && y == 0) throw std::invalid_argument("zero vector");
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                          boost::multiprecision::abs(y));
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

// Saturated integer kernel in Z^2 of integer constraint rows (each row
// (r1, r2) imposes r1*x + r2*y = 0), in Hermite-reduced form.
inline std::vector<std::array<BigInt, 2>> integer_kernel_2(
    const std::vector<std::array<long, 2>>& rows) {
    std::vector<std::vector<Rational>> m;
    for (auto& row : rows)
        if (row[0] != 0 || row[1] != 0) m.push_back({Rational(row[0]), Rational(row[1])});
    auto basis = rational_kernel(std::move(m), 2);
    if (basis.size() == 2) return {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}};
    if (basis.empty()) return {};
    return {primitive_integer_vector(basis[0][0], basis[0][1])};
}

// 2x2 matrix over the Gaussian rationals.
struct Mat2 {
    GQ a, b, c, d;  // [[a, b], [c, d]]

    static Mat2 identity() { return Mat2{GQ(1), GQ(0), GQ(0), GQ(1)}; }

    GQ det() const { return a * d - b * c; }
    GQ trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    Mat2 inverse() const {
        GQ dt = det();
        if (dt.is_zero()) throw std::domain_error("singular matrix");
        return Mat2{d / dt, -(b / dt), -(c / dt), a / dt};
    }

    bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
    bool is_scalar() const { return is_diagonal() && a == d; }
};

}  // namespace modelkit
