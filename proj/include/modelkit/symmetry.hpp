#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "modelkit/flows.hpp"

namespace modelkit {

// ---------------------------------------------------------------------------
// Model domain { z in C^3 : 2 Re z3 + P(z1, z2, cz1, cz2) < 0 }
// ---------------------------------------------------------------------------

struct ModelDomain {
    RPoly P;
    bool assume_nondegenerate = false;

    explicit ModelDomain(RPoly poly, bool assume = false)
        : P(std::move(poly)), assume_nondegenerate(assume) {
        if (!P.is_real()) throw std::invalid_argument("model polynomial must be real-valued");
        if (!P.constant_term().is_zero())
            throw std::invalid_argument("model polynomial must vanish at the origin");
    }
};

// ---------------------------------------------------------------------------
// Necessary conditions for finite type (incomplete by design: these are
// obstructions only, never a proof of nondegeneracy).
// ---------------------------------------------------------------------------

struct FiniteTypeVerdict {
    bool pass = false;
    std::vector<std::string> reasons;
};

inline FiniteTypeVerdict finite_type_necessary(const RPoly& P) {
    if (!P.is_real()) throw std::invalid_argument("finite_type_necessary needs real P");
    FiniteTypeVerdict out;
    auto split = pluriharmonic_split(P);
    if (split.core.is_zero()) {
        out.reasons.push_back("pluriharmonic");
        return out;
    }
    auto parts = split_parts(split.core);
    if (parts.p1.is_zero()) out.reasons.push_back("P1 vanishes identically");
    if (parts.p2.is_zero()) out.reasons.push_back("P2 vanishes identically");
    if (!out.reasons.empty()) return out;

    // Complex-line probes z_l = c over a small candidate set.
    const GQ candidates[] = {GQ(0), GQ(1), GQ(-1), GQ::i(), -GQ::i()};
    for (int l = 1; l <= 2; ++l) {
        for (const GQ& c : candidates) {
            PolyMap line = (l == 1)
                               ? PolyMap{HoloPoly(RPoly(c)), HoloPoly(RPoly::var_z2())}
                               : PolyMap{HoloPoly(RPoly::var_z1()), HoloPoly(RPoly(c))};
            if (substitute(P, line).is_pluriharmonic())
                out.reasons.push_back("complex line {z" + std::to_string(l) + " = " +
                                      gq_to_string(c) + "} sits in a boundary level set");
        }
    }
    out.pass = out.reasons.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Rotational torus
// ---------------------------------------------------------------------------

struct WeightKernel {
    std::vector<std::array<BigInt, 2>> basis;  // primitive, Hermite-reduced
    int rank() const { return static_cast<int>(basis.size()); }

    bool contains(long x, long y) const {
        if (basis.size() == 2) return true;
        if (basis.empty()) return x == 0 && y == 0;
        return basis[0][0] * y == basis[0][1] * x;
    }
};

inline WeightKernel torus_weights(const RPoly& P) {
    WeightKernel out;
    out.basis = integer_kernel_2(rotation_constraint_rows(P));
    return out;
}

inline std::array<TranslationVerdict, 2> translation_directions(const RPoly& P) {
    return {translation_direction(P, 1), translation_direction(P, 2)};
}

inline bool zn_rotation_check(const RPoly& P, long a, long b, long n) {
    if (n < 1) throw std::invalid_argument("rotation order must be positive");
    for (auto& [m, _] : P.terms()) {
        long v = (m.j1 - m.k1) * a + (m.j2 - m.k2) * b;
        if (v % n != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Tangent holomorphic vector fields up to a degree bound
// ---------------------------------------------------------------------------

inline std::vector<VField> tangent_fields(const RPoly& P, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (!P.is_real()) throw std::invalid_argument("tangent_fields needs real P");

    // Unknowns: complex coefficient (2 real unknowns) of each holomorphic
    // monomial of degree <= bound in X1 and X2, plus the real drift beta.
    std::vector<Monomial> monos;
    for (int j1 = 0; j1 <= degree_bound; ++j1)
        for (int j2 = 0; j1 + j2 <= degree_bound; ++j2) monos.emplace_back(j1, 0, j2, 0);

    struct Unknown {
        int component;  // 0: X1, 1: X2, 2: drift
        Monomial m;
        bool imag;
    };
    std::vector<Unknown> unknowns;
    for (int comp = 0; comp <= 1; ++comp)
        for (auto& m : monos)
            for (bool imag : {false, true}) unknowns.push_back({comp, m, imag});
    unknowns.push_back({2, Monomial{}, true});  // drift i*beta, beta real

    // Response of each unknown: V for a unit value of that unknown.
    std::map<Monomial, std::size_t> row_of;
    std::vector<RPoly> responses;
    for (auto& u : unknowns) {
        RPoly resp;
        if (u.component != 2) {
            GQ c = u.imag ? GQ::i() : GQ(1);
            VField x;
            (u.component == 0 ? x.X1 : x.X2) = HoloPoly(RPoly(c, u.m));
            resp = invariance_derivative(P, x);
        }
        for (auto& [m, _] : resp.terms())
            if (!row_of.count(m)) row_of.emplace(m, row_of.size());
        responses.push_back(std::move(resp));
    }

    std::vector<std::vector<Rational>> mat(2 * row_of.size(),
                                           std::vector<Rational>(unknowns.size(), Rational(0)));
    for (std::size_t col = 0; col < unknowns.size(); ++col)
        for (auto& [m, c] : responses[col].terms()) {
            std::size_t r = row_of.at(m);
            mat[2 * r][col] = c.re;
            mat[2 * r + 1][col] = c.im;
        }

    std::vector<VField> fields;
    for (auto& vec : rational_kernel(std::move(mat), unknowns.size())) {
        VField f;
        RPoly x1, x2;
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            if (vec[col] == 0) continue;
            const Unknown& u = unknowns[col];
            GQ c = u.imag ? GQ(Rational(0), vec[col]) : GQ(vec[col]);
            if (u.component == 0)
                x1.add_term(u.m, c);
            else if (u.component == 1)
                x2.add_term(u.m, c);
            else
                f.drift += c;
        }
        f.X1 = HoloPoly(x1);
        f.X2 = HoloPoly(x2);
        fields.push_back(std::move(f));
    }
    return fields;
}

// ---------------------------------------------------------------------------
// Classification report
// ---------------------------------------------------------------------------

struct ClassificationReport {
    FiniteTypeVerdict finite_type;
    WeightKernel torus;
    std::array<TranslationVerdict, 2> translations;
    std::vector<std::array<long, 3>> zn_rotations;  // (a, b, N), discrete-only
    enum class Case3 { None, I, II, III } thm3_case = Case3::None;
    enum class Case2 { None, I, II, III, IV } thm2_case = Case2::None;
    std::vector<std::string> notes;
};

inline ClassificationReport classify(const ModelDomain& d) {
    ClassificationReport rep;
    rep.finite_type = finite_type_necessary(d.P);
    if (!rep.finite_type.pass && !d.assume_nondegenerate) return rep;

    rep.torus = torus_weights(d.P);
    rep.translations = translation_directions(d.P);
    bool g1 = rep.translations[0].genuine, g2 = rep.translations[1].genuine;
    bool has10 = rep.torus.contains(1, 0), has01 = rep.torus.contains(0, 1);
    bool extreme = is_extremely_balanced(d.P);

    // Discrete-only cyclic rotations: pass the mod-N check but are not part
    // of the continuous torus.
    auto rows = rotation_constraint_rows(d.P);
    for (long n = 2; n <= 6; ++n)
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                if ((a == 0 && b == 0) || std::gcd(std::gcd(a, b), n) != 1) continue;
                if (!zn_rotation_check(d.P, a, b, n)) continue;
                bool continuous = true;
                for (auto& r : rows)
                    if (r[0] * a + r[1] * b != 0) continuous = false;
                if (!continuous) rep.zn_rotations.push_back({a, b, n});
            }

    if (g1 && g2)
        rep.thm3_case = ClassificationReport::Case3::I;
    else if ((g1 && !g2 && has01) || (g2 && !g1 && has10))
        rep.thm3_case = ClassificationReport::Case3::II;
    else if (extreme && !g1 && !g2)
        rep.thm3_case = ClassificationReport::Case3::III;

    if ((g1 && has01) || (g2 && has10))
        rep.thm2_case = ClassificationReport::Case2::III;
    else if (g1 || g2)
        rep.thm2_case = ClassificationReport::Case2::I;
    else if (has01 || has10)
        rep.thm2_case = ClassificationReport::Case2::II;
    else if (rep.torus.rank() == 1 && rep.torus.basis[0][0] != 0 && rep.torus.basis[0][1] != 0) {
        rep.thm2_case = ClassificationReport::Case2::IV;
        auto parts = split_parts(pluriharmonic_split(d.P).core);
        if (parts.mixed.is_zero() || is_extremely_balanced(parts.mixed))
            rep.notes.push_back("mixed part extremely balanced or zero: symmetry dimension >= 3");
        else
            rep.notes.push_back("mixed part nonzero and not extremely balanced");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Model map verification: mu * P = P o 'g + 2 Re phi
// ---------------------------------------------------------------------------

struct VerifyResult {
    bool pass = false;
    bool invertible = true;
    RPoly residual;
    std::vector<std::string> reasons;
};

inline VerifyResult verify_model_map(const ModelDomain& d, const ModelMap& g) {
    VerifyResult out;
    RPoly jac = jacobian_determinant(g.plane);
    bool jac_constant =
        jac.is_zero() ||
        (jac.term_count() == 1 && jac.terms().begin()->first.is_constant());
    if (jac.is_zero() || !jac_constant) {
        out.invertible = false;
        out.reasons.push_back("plane map is not invertible (Jacobian not a nonzero constant)");
    }
    if (g.mu == 0) {
        out.reasons.push_back("mu must be nonzero");
        return out;
    }
    bool origin_fixed =
        g.plane.f1.value_at_origin().is_zero() && g.plane.f2.value_at_origin().is_zero();
    if (pluriharmonic_split(d.P).q.is_zero() && origin_fixed && g.mu != 1)
        out.reasons.push_back("mu must equal 1 for a pluriharmonic-free P with 'g(0) = 0");

    out.residual = GQ(g.mu) * d.P - substitute(d.P, g.plane) - two_re(g.phi);
    if (!out.residual.is_zero()) out.reasons.push_back("invariance identity fails");
    out.pass = out.reasons.empty();
    return out;
}

}  // namespace modelkit
