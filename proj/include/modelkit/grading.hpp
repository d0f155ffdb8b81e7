#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modelkit/poly.hpp"

namespace modelkit {

// Weight data Theta = (theta1, theta2) together with the acting group.
struct Weight {
    enum class Group { Circle, Integers, CyclicN };

    Rational theta1;
    Rational theta2;
    Group group = Group::Circle;
    // CyclicN data: theta_l = (a or b)/N turns, stored exactly.
    long a = 0, b = 0, n = 1;

    static Weight circle(Rational t1, Rational t2) {
        return Weight{std::move(t1), std::move(t2), Group::Circle};
    }
    static Weight integers(Rational t1, Rational t2) {
        return Weight{std::move(t1), std::move(t2), Group::Integers};
    }
    static Weight cyclic(long a, long b, long n) {
        if (n < 1) throw std::invalid_argument("cyclic order must be positive");
        Weight w;
        w.theta1 = Rational(a, n);
        w.theta2 = Rational(b, n);
        w.group = Group::CyclicN;
        w.a = a;
        w.b = b;
        w.n = n;
        return w;
    }
};

// Holomorphic quotient, stored as an exact ratio (never a logarithm).
struct Hq {
    enum class Kind { Finite, PlusInfinity, MinusInfinity, Undefined };
    Kind kind = Kind::Undefined;
    Rational ratio;  // meaningful for Finite only; "hq = 0" is ratio 1

    static Hq finite(Rational r) { return Hq{Kind::Finite, std::move(r)}; }
    static Hq plus_inf() { return Hq{Kind::PlusInfinity, {}}; }
    static Hq minus_inf() { return Hq{Kind::MinusInfinity, {}}; }
    static Hq undefined() { return Hq{Kind::Undefined, {}}; }

    bool is_finite() const { return kind == Kind::Finite; }

    // Ratio inversion; +/- infinity swap.
    Hq inverse() const {
        switch (kind) {
            case Kind::Finite: return finite(Rational(1) / ratio);
            case Kind::PlusInfinity: return minus_inf();
            case Kind::MinusInfinity: return plus_inf();
            default: return undefined();
        }
    }

    friend bool operator==(const Hq& x, const Hq& y) {
        if (x.kind != y.kind) return false;
        return x.kind != Kind::Finite || x.ratio == y.ratio;
    }
    friend bool operator<(const Hq& x, const Hq& y) {
        if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
        return x.kind == Kind::Finite && x.ratio < y.ratio;
    }
};

struct Grade {
    Rational wt;
    Rational sgn;
    Hq hq;
};

inline Rational monomial_weight(const Monomial& m, const Weight& w) {
    return Rational(m.j1 + m.k1) * w.theta1 + Rational(m.j2 + m.k2) * w.theta2;
}

inline Rational monomial_signature(const Monomial& m, const Weight& w) {
    return Rational(m.j1 - m.k1) * w.theta1 + Rational(m.j2 - m.k2) * w.theta2;
}

inline Hq monomial_hq(const Monomial& m, const Weight& w) {
    if (!(w.theta1 > 0 && w.theta2 > 0)) return Hq::undefined();
    Rational hol = Rational(m.j1) * w.theta1 + Rational(m.j2) * w.theta2;
    Rational anti = Rational(m.k1) * w.theta1 + Rational(m.k2) * w.theta2;
    if (anti == 0 && hol == 0) return Hq::undefined();
    if (anti == 0) return Hq::plus_inf();
    if (hol == 0) return Hq::minus_inf();
    return Hq::finite(hol / anti);
}

inline Grade grade(const Monomial& m, const Weight& w) {
    if (m.var_degree() == 0) throw std::domain_error("grade of a constant monomial is undefined");
    return Grade{monomial_weight(m, w), monomial_signature(m, w), monomial_hq(m, w)};
}

inline std::vector<std::pair<Rational, RPoly>> weighted_expansion(const RPoly& p,
                                                                  const Weight& w) {
    std::map<Rational, RPoly> parts;
    for (auto& [m, c] : p.terms()) parts[monomial_weight(m, w)].add_term(m, c);
    return {parts.begin(), parts.end()};
}

inline std::vector<std::pair<Rational, RPoly>> signature_expansion(const RPoly& p,
                                                                   const Weight& w) {
    std::map<Rational, RPoly> parts;
    for (auto& [m, c] : p.terms()) parts[monomial_signature(m, w)].add_term(m, c);
    return {parts.begin(), parts.end()};
}

inline bool is_balanced(const Monomial& m, const Weight& w) {
    switch (w.group) {
        case Weight::Group::Circle: return monomial_signature(m, w) == 0;
        case Weight::Group::Integers: return rat_is_integer(monomial_signature(m, w));
        case Weight::Group::CyclicN: {
            long v = (m.j1 - m.k1) * w.a + (m.j2 - m.k2) * w.b;
            long r = v % w.n;
            return r == 0;
        }
    }
    return false;
}

inline bool balanced_in_variable(const Monomial& m, int which) {
    if (which == 1) return m.j1 == m.k1;
    if (which == 2) return m.j2 == m.k2;
    throw std::invalid_argument("variable index must be 1 or 2");
}

inline bool is_extremely_balanced(const RPoly& p) {
    for (auto& [m, _] : p.terms())
        if (!balanced_in_variable(m, 1) || !balanced_in_variable(m, 2)) return false;
    return true;
}

struct BalanceClass {
    bool strictly_balanced = false;
    bool extremely_balanced = false;
    bool extremely_imbalanced = false;  // every monomial pure
    bool diversely_balanced = false;
};

inline BalanceClass balance_class(const RPoly& p, const Weight& w) {
    if (p.is_zero() || (p.term_count() == 1 && p.terms().begin()->first.is_var_constant()))
        throw std::invalid_argument("balance_class of a constant polynomial");
    BalanceClass out;
    out.strictly_balanced = true;
    out.extremely_balanced = true;
    out.extremely_imbalanced = true;
    bool has_pure_or_constant = false;
    Rational ratio_product = 1;
    bool all_hq_finite = true;
    for (auto& [m, _] : p.terms()) {
        if (!is_balanced(m, w)) out.strictly_balanced = false;
        if (!balanced_in_variable(m, 1) || !balanced_in_variable(m, 2))
            out.extremely_balanced = false;
        if (!m.is_pure() || m.is_var_constant()) out.extremely_imbalanced = false;
        if (m.is_pure() || m.is_var_constant()) has_pure_or_constant = true;
        Hq h = monomial_hq(m, w);
        if (h.is_finite())
            ratio_product *= h.ratio;
        else
            all_hq_finite = false;
    }
    out.diversely_balanced = !has_pure_or_constant && all_hq_finite && ratio_product == 1;
    return out;
}

// S_W = { hq(m) : wt(m) = W }, enumerated exactly; requires positive weights.
inline std::set<Hq> s_w_set(const Rational& weight, const Weight& w) {
    if (!(w.theta1 > 0 && w.theta2 > 0))
        throw std::invalid_argument("s_w_set needs componentwise positive weights");
    auto bound = [&](const Rational& theta) {
        Rational q = weight / theta;
        return static_cast<long>(rat_num(q) / rat_den(q));
    };
    long b1 = bound(w.theta1), b2 = bound(w.theta2);
    std::set<Hq> out;
    for (long j1 = 0; j1 <= b1; ++j1)
        for (long k1 = 0; k1 + j1 <= b1; ++k1)
            for (long j2 = 0; j2 <= b2; ++j2)
                for (long k2 = 0; k2 + j2 <= b2; ++k2) {
                    if (j1 + k1 + j2 + k2 == 0) continue;
                    Monomial m(static_cast<int>(j1), static_cast<int>(k1),
                               static_cast<int>(j2), static_cast<int>(k2));
                    if (monomial_weight(m, w) == weight) out.insert(monomial_hq(m, w));
                }
    return out;
}

// p must be weighted homogeneous w.r.t. w with positive components.
inline bool completely_diversely_balanced(const RPoly& p, const Weight& w) {
    if (p.is_zero()) throw std::invalid_argument("empty polynomial");
    auto expansion = weighted_expansion(p, w);
    if (expansion.size() != 1)
        throw std::invalid_argument("polynomial is not weighted homogeneous");
    std::set<Hq> present;
    for (auto& [m, _] : p.terms()) present.insert(monomial_hq(m, w));
    return present == s_w_set(expansion.front().first, w);
}

}  // namespace modelkit
