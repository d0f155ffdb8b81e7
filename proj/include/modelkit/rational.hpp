#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace modelkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Exact integer square root; nullopt when n is not a perfect square.
inline std::optional<BigInt> perfect_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return BigInt(0);
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// Exact rational square root; nullopt when r is not a square in Q.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = perfect_sqrt(rat_num(r));
    if (!n) return std::nullopt;
    auto d = perfect_sqrt(rat_den(r));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline bool rat_is_integer(const Rational& r) { return rat_den(r) == 1; }

}  // namespace modelkit
