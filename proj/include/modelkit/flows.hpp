#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modelkit/decomposition.hpp"
#include "modelkit/grading.hpp"
#include "modelkit/linalg.hpp"
#include "modelkit/parser.hpp"
#include "modelkit/poly.hpp"

namespace modelkit {

// ---------------------------------------------------------------------------
// One-parameter subgroup normal forms
//   Type1 : (z1, e^{bs} z2)                      b != 0
//   Type2a: (z1 + s, e^{bs} z2)                  b != 0
//   Type2b: (z1 + s, z2)
//   Type3 : (z1, z2 + p(z1) s)                   p monic, deg >= 1
//   Type4 : (e^{as} z1, e^{bs} z2)               a, b != 0
//   Type5 : (e^{as} z1, e^{ads}(z2 + s z1^d))    a != 0, d >= 1
// each extended by the third-component drift z3 + i*beta3*s.
// ---------------------------------------------------------------------------

struct FlowSpec {
    enum class Kind { Type1, Type2a, Type2b, Type3, Type4, Type5 };

    Kind kind = Kind::Type2b;
    GQ a, b;
    HoloPoly p;  // Type3 polynomial in z1
    int d = 0;   // Type5 exponent
    Rational beta3;

    static FlowSpec type1(GQ b, Rational beta3 = 0) {
        if (b.is_zero()) throw std::invalid_argument("type 1 needs b != 0");
        FlowSpec f;
        f.kind = Kind::Type1;
        f.b = std::move(b);
        f.beta3 = std::move(beta3);
        return f;
    }
    static FlowSpec type2a(GQ b) {
        if (b.is_zero()) throw std::invalid_argument("type 2a needs b != 0");
        FlowSpec f;
        f.kind = Kind::Type2a;
        f.b = std::move(b);
        return f;
    }
    static FlowSpec type2b() {
        FlowSpec f;
        f.kind = Kind::Type2b;
        return f;
    }
    static FlowSpec type3(HoloPoly p) {
        bool in_z1_only = true;
        int deg = 0;
        for (auto& [m, _] : p.poly().terms()) {
            if (m.j2 > 0 || !m.params.empty()) in_z1_only = false;
            deg = std::max(deg, m.j1);
        }
        if (!in_z1_only || deg < 1)
            throw std::invalid_argument("type 3 needs a polynomial in z1 of degree >= 1");
        if (p.poly().coeff(Monomial(deg, 0, 0, 0)) != GQ(1))
            throw std::invalid_argument("type 3 polynomial must be monic");
        FlowSpec f;
        f.kind = Kind::Type3;
        f.p = std::move(p);
        return f;
    }
    static FlowSpec type4(GQ a, GQ b, Rational beta3 = 0) {
        if (a.is_zero() || b.is_zero()) throw std::invalid_argument("type 4 needs a, b != 0");
        FlowSpec f;
        f.kind = Kind::Type4;
        f.a = std::move(a);
        f.b = std::move(b);
        f.beta3 = std::move(beta3);
        return f;
    }
    static FlowSpec type5(GQ a, int d, Rational beta3 = 0) {
        if (a.is_zero() || d < 1) throw std::invalid_argument("type 5 needs a != 0, d >= 1");
        FlowSpec f;
        f.kind = Kind::Type5;
        f.a = std::move(a);
        f.d = d;
        f.beta3 = std::move(beta3);
        return f;
    }

    std::string kind_name() const {
        switch (kind) {
            case Kind::Type1: return "type1";
            case Kind::Type2a: return "type2a";
            case Kind::Type2b: return "type2b";
            case Kind::Type3: return "type3";
            case Kind::Type4: return "type4";
            case Kind::Type5: return "type5";
        }
        return "?";
    }
};

// Holomorphic vector field X1 d/dz1 + X2 d/dz2 + drift d/dz3 (drift constant).
struct VField {
    HoloPoly X1, X2;
    GQ drift;

    static VField canonical_T() { return VField{HoloPoly(), HoloPoly(), GQ::i()}; }

    bool plane_zero() const { return X1.is_zero() && X2.is_zero(); }

    friend bool operator==(const VField& x, const VField& y) {
        return x.X1 == y.X1 && x.X2 == y.X2 && x.drift == y.drift;
    }
    friend bool operator!=(const VField& x, const VField& y) { return !(x == y); }
};

inline VField rotation_field(const Rational& alpha, const Rational& beta) {
    return VField{HoloPoly(GQ(Rational(0), alpha) * RPoly::var_z1()),
                  HoloPoly(GQ(Rational(0), beta) * RPoly::var_z2()), GQ(0)};
}

inline VField generator(const FlowSpec& f) {
    VField v;
    v.drift = GQ(Rational(0), f.beta3);
    const RPoly z1 = RPoly::var_z1(), z2 = RPoly::var_z2();
    switch (f.kind) {
        case FlowSpec::Kind::Type1:
            v.X2 = HoloPoly(f.b * z2);
            break;
        case FlowSpec::Kind::Type2a:
            v.X1 = HoloPoly(RPoly::one());
            v.X2 = HoloPoly(f.b * z2);
            break;
        case FlowSpec::Kind::Type2b:
            v.X1 = HoloPoly(RPoly::one());
            break;
        case FlowSpec::Kind::Type3:
            v.X2 = f.p;
            break;
        case FlowSpec::Kind::Type4:
            v.X1 = HoloPoly(f.a * z1);
            v.X2 = HoloPoly(f.b * z2);
            break;
        case FlowSpec::Kind::Type5:
            v.X1 = HoloPoly(f.a * z1);
            v.X2 = HoloPoly(GQ(Rational(f.d)) * f.a * z2 + z1.pow(f.d));
            break;
    }
    return v;
}

// [X, Y] = (X . grad) Y - (Y . grad) X on the plane components; drifts
// bracket to zero.
inline VField lie_bracket(const VField& x, const VField& y) {
    auto apply = [](const VField& v, const HoloPoly& f) {
        return HoloPoly(v.X1.poly() * f.poly().derivative(1) +
                        v.X2.poly() * f.poly().derivative(3));
    };
    VField out;
    out.X1 = apply(x, y.X1) - apply(y, x.X1);
    out.X2 = apply(x, y.X2) - apply(y, x.X2);
    out.drift = GQ(0);
    return out;
}

inline bool commutes(const FlowSpec& f, const FlowSpec& g) {
    VField br = lie_bracket(generator(f), generator(g));
    return br.X1.is_zero() && br.X2.is_zero();
}

// ---------------------------------------------------------------------------
// Invariance of P under a field
// ---------------------------------------------------------------------------

struct InvarianceResult {
    enum class Kind { Invariant, InvariantModPluriharmonic, Violated };
    Kind kind;
    HoloPoly psi;    // V = 2 Re psi in the mod-pluriharmonic case
    RPoly residual;  // non-pluriharmonic part when violated
};

// V = 2 Re (X1 dP/dz1 + X2 dP/dz2); P real-valued.
inline RPoly invariance_derivative(const RPoly& P, const VField& X) {
    RPoly w = X.X1.poly() * P.derivative(1) + X.X2.poly() * P.derivative(3);
    return w + w.conj();
}

inline InvarianceResult invariance_constraint(const RPoly& P, const VField& X) {
    if (!P.is_real()) throw std::invalid_argument("invariance_constraint needs real P");
    RPoly v = invariance_derivative(P, X);
    if (v.is_zero()) return {InvarianceResult::Kind::Invariant, HoloPoly(), RPoly()};
    auto split = pluriharmonic_split(v);
    if (split.core.is_zero())
        return {InvarianceResult::Kind::InvariantModPluriharmonic, split.q, RPoly()};
    return {InvarianceResult::Kind::Violated, HoloPoly(), split.core};
}

inline std::vector<std::array<long, 2>> rotation_constraint_rows(const RPoly& P) {
    if (!P.is_real()) throw std::invalid_argument("rotation_constraint_rows needs real P");
    std::set<std::array<long, 2>> rows;
    for (auto& [m, _] : P.terms())
        if (!m.is_var_constant()) rows.insert({long(m.j1 - m.k1), long(m.j2 - m.k2)});
    return {rows.begin(), rows.end()};
}

// ---------------------------------------------------------------------------
// Translation directions (shared with the symmetry module)
// ---------------------------------------------------------------------------

struct TranslationVerdict {
    enum class Kind { Invariant, InvariantModPluriharmonic, NotInvariant };
    Kind kind = Kind::NotInvariant;
    HoloPoly psi;    // dP/dx_l = 2 Re psi
    HoloPoly shear;  // q with P - 2 Re q free of Re z_l
    bool genuine = false;
};

// Antiderivative of a holomorphic polynomial in z_l.
inline HoloPoly holo_integrate(const HoloPoly& p, int l) {
    if (l != 1 && l != 2) throw std::invalid_argument("variable index must be 1 or 2");
    RPoly out;
    for (auto& [m, c] : p.poly().terms()) {
        Monomial n = m;
        int e = (l == 1 ? ++n.j1 : ++n.j2);
        out.add_term(n, c / GQ(Rational(e)));
    }
    return HoloPoly(out);
}

inline TranslationVerdict translation_direction(const RPoly& P, int l) {
    if (l != 1 && l != 2) throw std::invalid_argument("variable index must be 1 or 2");
    if (!P.is_real()) throw std::invalid_argument("translation_direction needs real P");
    TranslationVerdict out;
    RPoly d = (l == 1) ? P.derivative(1) + P.derivative(2) : P.derivative(3) + P.derivative(4);
    if (d.is_zero()) {
        out.kind = TranslationVerdict::Kind::Invariant;
        out.genuine = true;
        return out;
    }
    if (!d.is_pluriharmonic()) return out;
    out.kind = TranslationVerdict::Kind::InvariantModPluriharmonic;
    out.psi = pluriharmonic_split(d).q;
    // d(2 Re q)/dx_l = 2 Re psi, so P - 2 Re q has no Re z_l dependence.
    out.shear = holo_integrate(out.psi, l);
    out.genuine = true;
    return out;
}

// ---------------------------------------------------------------------------
// Admissible flow types for a model polynomial
// ---------------------------------------------------------------------------

struct AdmissibleFlows {
    struct Entry {
        std::string kind;
        bool admissible = false;
        std::string certificate;
    };
    std::vector<Entry> entries;

    const Entry& find(const std::string& kind) const {
        for (auto& e : entries)
            if (e.kind == kind) return e;
        throw std::out_of_range("no such flow kind entry: " + kind);
    }
};

inline AdmissibleFlows admissible_flow_types(const RPoly& P) {
    if (!P.is_real()) throw std::invalid_argument("admissible_flow_types needs real P");
    auto split = pluriharmonic_split(P);
    if (split.core.is_zero())
        throw std::invalid_argument("degenerate model: P is pluriharmonic");
    auto parts = split_parts(split.core);
    if (parts.p1.is_zero() || parts.p2.is_zero())
        throw std::invalid_argument("degenerate model: a variable block vanishes");

    auto kernel = integer_kernel_2(rotation_constraint_rows(P));
    auto contains = [&](long x, long y) {
        if (kernel.size() == 2) return true;
        if (kernel.empty()) return false;
        // rank 1: (x, y) must be an integer multiple of the primitive basis
        return kernel[0][0] * y == kernel[0][1] * x;
    };
    bool has10 = contains(1, 0), has01 = contains(0, 1);
    bool both_nonzero =
        kernel.size() == 2 || (kernel.size() == 1 && kernel[0][0] != 0 && kernel[0][1] != 0);
    auto t1 = translation_direction(P, 1);
    auto t2 = translation_direction(P, 2);
    bool extreme = is_extremely_balanced(P);

    AdmissibleFlows out;
    auto add = [&](std::string kind, bool ok, std::string cert) {
        out.entries.push_back({std::move(kind), ok, std::move(cert)});
    };

    add("type1-z1", has10,
        has10 ? "(1,0) lies in the rotation kernel" : "(1,0) not in the rotation kernel");
    add("type1-z2", has01,
        has01 ? "(0,1) lies in the rotation kernel" : "(0,1) not in the rotation kernel");

    std::string trans_cert;
    bool trans = (t1.genuine || t2.genuine) && !extreme;
    if (extreme && (t1.genuine || t2.genuine))
        trans_cert = "extremely balanced model: rotational type takes precedence";
    else if (t1.genuine)
        trans_cert = "genuine translation direction in z1";
    else if (t2.genuine)
        trans_cert = "genuine translation direction in z2";
    else
        trans_cert = "no translation direction, even mod pluriharmonic terms";
    add("type2b", trans, trans_cert);

    bool t2a = ((t1.genuine && has01) || (t2.genuine && has10)) && !extreme;
    add("type2a", t2a,
        t2a ? "translation in one variable combines with a rotation in the other"
            : "needs a translation direction and an independent rotation");

    add("type3", false, "orbit closure forces a complex variety in the boundary");

    if (both_nonzero) {
        std::string cert = kernel.size() == 2
                               ? "rotation kernel is all of Z^2"
                               : "rotation kernel vector (" + kernel[0][0].str() + "," +
                                     kernel[0][1].str() + ") has both entries nonzero";
        add("type4", true, cert);
    } else {
        add("type4", false, "no rotation kernel vector with both entries nonzero");
    }

    std::string t5cert = "type-5 orbits are incompatible with a rigid model";
    for (auto& [m, _] : P.terms())
        if (!m.involves_z1() && m.involves_z2() && m.is_pure() && m.params.empty()) {
            t5cert = "z2-pure monomial " + monomial_to_string(m) +
                     " forces its coefficient to vanish: contradiction";
            break;
        }
    add("type5", false, t5cert);
    return out;
}

// ---------------------------------------------------------------------------
// Simultaneous diagonalization of commuting 2x2 matrices over Q(i)
// ---------------------------------------------------------------------------

namespace detail {

// Eigenvalues of a 2x2 matrix, when they lie in Q(i).
inline std::pair<GQ, GQ> eigenvalues_2(const Mat2& m) {
    GQ tr = m.trace(), dt = m.det();
    GQ disc = tr * tr - GQ(4) * dt;
    auto root = gaussian_sqrt(disc);
    if (!root) throw std::domain_error("eigenvalues lie outside Q(i)");
    GQ half(Rational(1, 2));
    return {half * (tr + *root), half * (tr - *root)};
}

// Columns of H are an eigenbasis of m; throws when m is not diagonalizable.
inline Mat2 eigenbasis_2(const Mat2& m) {
    auto [l1, l2] = eigenvalues_2(m);
    if (l1 == l2) {
        if (!m.is_scalar()) throw std::domain_error("matrix is not diagonalizable");
        return Mat2::identity();
    }
    // Columns of (m - l2 I) span ker(m - l1 I), and vice versa.
    auto column_of = [](const Mat2& x) {
        if (!x.a.is_zero() || !x.c.is_zero()) return std::pair<GQ, GQ>{x.a, x.c};
        return std::pair<GQ, GQ>{x.b, x.d};
    };
    Mat2 shift1 = m - Mat2{l2, GQ(0), GQ(0), l2};
    Mat2 shift2 = m - Mat2{l1, GQ(0), GQ(0), l1};
    auto [v1a, v1b] = column_of(shift1);
    auto [v2a, v2b] = column_of(shift2);
    Mat2 h{v1a, v2a, v1b, v2b};
    if (h.det().is_zero()) throw std::domain_error("matrix is not diagonalizable");
    return h;
}

}  // namespace detail

inline Mat2 simultaneous_diagonalize(const Mat2& a, const Mat2& b) {
    if (a * b != b * a) throw std::invalid_argument("matrices do not commute");
    Mat2 h = a.is_scalar() ? detail::eigenbasis_2(b) : detail::eigenbasis_2(a);
    Mat2 hi = h.inverse();
    Mat2 da = hi * a * h, db = hi * b * h;
    if (!da.is_diagonal() || !db.is_diagonal())
        throw std::domain_error("matrix is not diagonalizable");
    return h;
}

// ---------------------------------------------------------------------------
// Elementary shear normalization of the family
//   R_t(z1, z2) = (z1 + q(e^{lambda t} z2) - q(z2) + c' t, e^{lambda t} z2)
// ---------------------------------------------------------------------------

struct ShearNormalization {
    PolyMap conjugator;  // E_q(z1, z2) = (z1 + q(z2), z2)
    FlowSpec normalized;
};

inline ShearNormalization shear_normalize(const HoloPoly& q, const GQ& lambda,
                                          const GQ& cprime) {
    for (auto& [m, _] : q.poly().terms())
        if (m.j1 > 0 || !m.params.empty())
            throw std::invalid_argument("shear polynomial must depend on z2 only");

    PolyMap e{HoloPoly(RPoly::var_z1() + q.poly()), HoloPoly(RPoly::var_z2())};

    // Family generator X = (c' + lambda z2 q'(z2), lambda z2); its pushback
    // under E must be the normalized generator Y = (c', lambda z2), i.e.
    // X o E = DE . Y exactly.
    RPoly z2 = RPoly::var_z2();
    RPoly x1 = RPoly(cprime) + lambda * (z2 * q.poly().derivative(3));
    RPoly x2 = lambda * z2;
    RPoly y1 = RPoly(cprime), y2 = lambda * z2;
    RPoly lhs1 = substitute(x1, e), lhs2 = substitute(x2, e);
    RPoly rhs1 = y1 + q.poly().derivative(3) * y2;
    if (lhs1 != rhs1 || lhs2 != y2)
        throw std::logic_error("shear conjugation identity failed");

    FlowSpec norm = lambda.is_zero() ? FlowSpec::type2b()
                    : cprime.is_zero() ? FlowSpec::type1(lambda)
                                       : FlowSpec::type2a(lambda);
    return ShearNormalization{e, norm};
}

// ---------------------------------------------------------------------------
// Commuting pair admissibility (pair table)
// ---------------------------------------------------------------------------

struct PairEntry {
    std::string first, second;
    bool model_admissible;
};

inline std::vector<PairEntry> admissible_pairs() {
    return {{"1", "1", true},  {"1", "2", true},  {"1", "4", true},
            {"2", "2", true},  {"4", "4", true},  {"2b", "3", false},
            {"3", "3", false}, {"3", "5", false}, {"5", "5", false}};
}

struct PairVerdict {
    bool commute = false;
    VField bracket;
    bool ga2_admissible = false;
    bool model_admissible = false;
    bool degree_condition_checked = false;
    bool degree_condition_ok = true;
    std::string notes;
};

inline PairVerdict pair_check(const FlowSpec& f, const FlowSpec& g) {
    PairVerdict out;
    out.bracket = lie_bracket(generator(f), generator(g));
    out.commute = out.bracket.X1.is_zero() && out.bracket.X2.is_zero();
    if (!out.commute) {
        out.notes = "flows do not commute; bracket residual attached";
        return out;
    }
    auto cls = [](const FlowSpec& s) -> int {
        switch (s.kind) {
            case FlowSpec::Kind::Type1: return 1;
            case FlowSpec::Kind::Type2a:
            case FlowSpec::Kind::Type2b: return 2;
            case FlowSpec::Kind::Type3: return 3;
            case FlowSpec::Kind::Type4: return 4;
            case FlowSpec::Kind::Type5: return 5;
        }
        return 0;
    };
    int c1 = cls(f), c2 = cls(g);
    if (c1 > c2) std::swap(c1, c2);
    auto deg3 = [](const FlowSpec& s) {
        int d = 0;
        for (auto& [m, _] : s.p.poly().terms()) d = std::max(d, m.j1);
        return d;
    };
    auto is_2b = [](const FlowSpec& s) { return s.kind == FlowSpec::Kind::Type2b; };

    auto pair_is = [&](int x, int y) { return c1 == x && c2 == y; };
    if (pair_is(1, 1) || pair_is(1, 2) || pair_is(1, 4) || pair_is(2, 2) || pair_is(4, 4)) {
        out.ga2_admissible = true;
        out.model_admissible = true;
    } else if (pair_is(2, 3)) {
        bool two_is_b = is_2b(f) || is_2b(g);
        out.ga2_admissible = two_is_b;
        if (!two_is_b) out.notes = "only the pure-translation type pairs with type 3";
    } else if (pair_is(3, 3)) {
        out.ga2_admissible = true;
    } else if (pair_is(3, 5)) {
        out.degree_condition_checked = true;
        const FlowSpec& t3 = (cls(f) == 3) ? f : g;
        const FlowSpec& t5 = (cls(f) == 5) ? f : g;
        out.degree_condition_ok = deg3(t3) == t5.d;
        out.ga2_admissible = out.degree_condition_ok;
        if (!out.degree_condition_ok) out.notes = "degree mismatch between types 3 and 5";
    } else if (pair_is(5, 5)) {
        out.degree_condition_checked = true;
        out.degree_condition_ok = f.d == g.d;
        out.ga2_admissible = out.degree_condition_ok;
        if (!out.degree_condition_ok) out.notes = "type-5 degrees differ";
    } else {
        out.notes = "pair not in the admissible table";
    }
    if (out.ga2_admissible && !out.model_admissible && out.notes.empty())
        out.notes = "admissible in GA2 but not realizable on a rigid model";
    return out;
}

}  // namespace modelkit
