#pragma once

#include <random>

#include "modelkit/poly.hpp"

namespace testutil {

using namespace modelkit;

// All randomized tests share deterministic generators seeded per test.
inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline Rational random_rational(std::mt19937& g, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(g), den(g));
}

inline Rational random_nonzero_rational(std::mt19937& g, int num_bound = 9,
                                        int den_bound = 4) {
    for (;;) {
        Rational r = random_rational(g, num_bound, den_bound);
        if (r != 0) return r;
    }
}

inline Rational random_positive_rational(std::mt19937& g, int num_bound = 9,
                                         int den_bound = 4) {
    std::uniform_int_distribution<int> num(1, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(g), den(g));
}

inline GQ random_gq(std::mt19937& g, int bound = 9) {
    return GQ(random_rational(g, bound), random_rational(g, bound));
}

inline GQ random_nonzero_gq(std::mt19937& g, int bound = 9) {
    for (;;) {
        GQ c = random_gq(g, bound);
        if (!c.is_zero()) return c;
    }
}

inline Monomial random_monomial(std::mt19937& g, int exp_bound) {
    std::uniform_int_distribution<int> e(0, exp_bound);
    return Monomial(e(g), e(g), e(g), e(g));
}

// Random polynomial: up to `terms` monomials of total degree <= degree.
inline RPoly random_poly(std::mt19937& g, int terms, int degree, int coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(1, terms);
    std::uniform_int_distribution<int> e(0, degree);
    RPoly p;
    int n = nterms(g);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (;;) {
            m = Monomial(e(g), e(g), e(g), e(g));
            if (m.total_degree() <= degree) break;
        }
        p.add_term(m, random_gq(g, coeff_bound));
    }
    return p;
}

// Random real-valued polynomial: p + conj(p), optionally with no pure terms.
inline RPoly random_real_poly(std::mt19937& g, int terms, int degree, bool mixed_only = false,
                              int coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(1, terms);
    std::uniform_int_distribution<int> e(0, degree);
    RPoly p;
    int n = nterms(g);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (;;) {
            m = Monomial(e(g), e(g), e(g), e(g));
            if (m.total_degree() > degree || m.is_var_constant()) continue;
            if (mixed_only && m.is_pure()) continue;
            break;
        }
        GQ c = random_gq(g, coeff_bound);
        p.add_term(m, c);
        p.add_term(m.conj(), c.conj());
    }
    return p;
}

inline HoloPoly random_holo_poly(std::mt19937& g, int terms, int degree,
                                 bool vanish_at_origin = false, int coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(1, terms);
    std::uniform_int_distribution<int> e(0, degree);
    RPoly p;
    int n = nterms(g);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (;;) {
            m = Monomial(e(g), 0, e(g), 0);
            if (m.total_degree() > degree) continue;
            if (vanish_at_origin && m.is_constant()) continue;
            break;
        }
        p.add_term(m, random_gq(g, coeff_bound));
    }
    return HoloPoly(p);
}

// Im z_l as an RPoly: (z_l - cz_l) / 2i.
inline RPoly im_var(int l) {
    RPoly z = (l == 1) ? RPoly::var_z1() : RPoly::var_z2();
    RPoly cz = (l == 1) ? RPoly::var_cz1() : RPoly::var_cz2();
    return GQ(Rational(0), Rational(-1, 2)) * (z - cz);
}

// Re z_l as an RPoly.
inline RPoly re_var(int l) {
    RPoly z = (l == 1) ? RPoly::var_z1() : RPoly::var_z2();
    RPoly cz = (l == 1) ? RPoly::var_cz1() : RPoly::var_cz2();
    return GQ(Rational(1, 2)) * (z + cz);
}

// |z_l|^2 as an RPoly.
inline RPoly abs2_var(int l) {
    return (l == 1) ? RPoly::var_z1() * RPoly::var_cz1() : RPoly::var_z2() * RPoly::var_cz2();
}

}  // namespace testutil
