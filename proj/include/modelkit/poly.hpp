#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modelkit/gaussian.hpp"

namespace modelkit {

// Monomial in z1, cz1 (= conj z1), z2, cz2 and optional formal real parameters.
// Exponent maps never store zero entries.
struct Monomial {
    int j1 = 0, k1 = 0, j2 = 0, k2 = 0;
    std::map<std::string, int> params;

    Monomial() = default;
    Monomial(int j1_, int k1_, int j2_, int k2_) : j1(j1_), k1(k1_), j2(j2_), k2(k2_) {
        if (j1 < 0 || k1 < 0 || j2 < 0 || k2 < 0)
            throw std::invalid_argument("negative exponent in monomial");
    }

    int var_degree() const { return j1 + k1 + j2 + k2; }
    int total_degree() const {
        int d = var_degree();
        for (auto& [_, e] : params) d += e;
        return d;
    }
    bool is_constant() const { return var_degree() == 0 && params.empty(); }
    bool is_var_constant() const { return var_degree() == 0; }
    bool is_holomorphic() const { return k1 == 0 && k2 == 0; }
    bool is_antiholomorphic() const { return j1 == 0 && j2 == 0; }
    // Pure: holomorphic or anti-holomorphic (in the variables).
    bool is_pure() const { return is_holomorphic() || is_antiholomorphic(); }
    bool is_mixed() const { return j1 + k1 > 0 && j2 + k2 > 0; }
    bool involves_z1() const { return j1 + k1 > 0; }
    bool involves_z2() const { return j2 + k2 > 0; }

    Monomial conj() const {
        Monomial m;
        m.j1 = k1;
        m.k1 = j1;
        m.j2 = k2;
        m.k2 = j2;
        m.params = params;  // formal parameters are self-conjugate
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.j1 = a.j1 + b.j1;
        m.k1 = a.k1 + b.k1;
        m.j2 = a.j2 + b.j2;
        m.k2 = a.k2 + b.k2;
        m.params = a.params;
        for (auto& [n, e] : b.params) {
            auto it = m.params.find(n);
            if (it == m.params.end())
                m.params.emplace(n, e);
            else
                it->second += e;
        }
        return m;
    }

    // Graded lexicographic: total degree first, then exponent tuple, then parameters.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        auto ta = std::array<int, 4>{a.j1, a.k1, a.j2, a.k2};
        auto tb = std::array<int, 4>{b.j1, b.k1, b.j2, b.k2};
        if (ta != tb) return ta < tb;
        return a.params < b.params;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.j1 == b.j1 && a.k1 == b.k1 && a.j2 == b.j2 && a.k2 == b.k2 &&
               a.params == b.params;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

inline std::size_t max_terms_cap() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("MODELKIT_MAX_TERMS")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(100000);
    }();
    return cap;
}

// Sparse polynomial over the Gaussian rationals in z1, cz1, z2, cz2 with
// optional formal real parameters. Canonical form: no stored zeros.
class RPoly {
public:
    using TermMap = std::map<Monomial, GQ>;

    RPoly() = default;
    explicit RPoly(GQ c) {
        if (!c.is_zero()) terms_[Monomial{}] = std::move(c);
    }
    RPoly(GQ c, Monomial m) {
        if (!c.is_zero()) terms_[std::move(m)] = std::move(c);
    }

    static RPoly zero() { return RPoly(); }
    static RPoly one() { return RPoly(GQ(1)); }
    static RPoly var_z1() { return RPoly(GQ(1), Monomial(1, 0, 0, 0)); }
    static RPoly var_cz1() { return RPoly(GQ(1), Monomial(0, 1, 0, 0)); }
    static RPoly var_z2() { return RPoly(GQ(1), Monomial(0, 0, 1, 0)); }
    static RPoly var_cz2() { return RPoly(GQ(1), Monomial(0, 0, 0, 1)); }
    static RPoly param(const std::string& name, int exp = 1) {
        Monomial m;
        if (exp != 0) m.params[name] = exp;
        return RPoly(GQ(1), m);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    GQ coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GQ(0) : it->second;
    }

    GQ constant_term() const { return coeff(Monomial{}); }

    int degree() const {
        int d = 0;
        for (auto& [m, _] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    void add_term(const Monomial& m, const GQ& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            check_cap();
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RPoly& operator+=(const RPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    RPoly& operator-=(const RPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
    friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
    RPoly operator-() const {
        RPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend RPoly operator*(const RPoly& a, const RPoly& b) {
        RPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    RPoly& operator*=(const RPoly& o) { return *this = *this * o; }

    friend RPoly operator*(const GQ& c, const RPoly& p) {
        RPoly r;
        if (c.is_zero()) return r;
        for (auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    RPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative power");
        RPoly r = one();
        RPoly base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const RPoly& a, const RPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RPoly& a, const RPoly& b) { return !(a == b); }

    // Swaps z <-> conj z and conjugates coefficients; formal parameters fixed.
    RPoly conj() const {
        RPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
        return r;
    }

    bool is_real() const { return *this == conj(); }

    bool is_holomorphic() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](auto& t) { return t.first.is_holomorphic(); });
    }

    bool has_params() const {
        return std::any_of(terms_.begin(), terms_.end(),
                           [](auto& t) { return !t.first.params.empty(); });
    }

    // All monomials pure (2 Re of a holomorphic polynomial, up to the real constant).
    bool is_pluriharmonic() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](auto& t) { return t.first.is_pure(); });
    }

    // which: 1..4 for z1, cz1, z2, cz2.
    RPoly derivative(int which) const {
        RPoly r;
        for (auto& [m, c] : terms_) {
            Monomial d = m;
            int e = 0;
            switch (which) {
                case 1: e = d.j1--; break;
                case 2: e = d.k1--; break;
                case 3: e = d.j2--; break;
                case 4: e = d.k2--; break;
                default: throw std::invalid_argument("bad variable index");
            }
            if (e > 0) r.add_term(d, GQ(Rational(e)) * c);
        }
        return r;
    }

private:
    void check_cap() const {
        if (terms_.size() > max_terms_cap())
            throw std::runtime_error("polynomial term count exceeds MODELKIT_MAX_TERMS");
    }

    TermMap terms_;
};

// Holomorphic polynomial in z1, z2 (anti-holomorphic exponents identically zero).
class HoloPoly {
public:
    HoloPoly() = default;
    explicit HoloPoly(RPoly p) : p_(std::move(p)) {
        if (!p_.is_holomorphic())
            throw std::invalid_argument("HoloPoly with anti-holomorphic terms");
    }

    const RPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.degree(); }
    GQ value_at_origin() const { return p_.constant_term(); }

    friend bool operator==(const HoloPoly& a, const HoloPoly& b) { return a.p_ == b.p_; }
    friend bool operator!=(const HoloPoly& a, const HoloPoly& b) { return !(a == b); }

    friend HoloPoly operator+(const HoloPoly& a, const HoloPoly& b) {
        return HoloPoly(a.p_ + b.p_);
    }
    friend HoloPoly operator-(const HoloPoly& a, const HoloPoly& b) {
        return HoloPoly(a.p_ - b.p_);
    }
    friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
        return HoloPoly(a.p_ * b.p_);
    }
    friend HoloPoly operator*(const GQ& c, const HoloPoly& p) { return HoloPoly(c * p.poly()); }

private:
    RPoly p_;
};

// 2 Re q as an RPoly.
inline RPoly two_re(const HoloPoly& q) { return q.poly() + q.poly().conj(); }

// Polynomial self-map of C^2 (possibly with formal parameters in its components).
struct PolyMap {
    HoloPoly f1;
    HoloPoly f2;

    static PolyMap identity() {
        return PolyMap{HoloPoly(RPoly::var_z1()), HoloPoly(RPoly::var_z2())};
    }
    static PolyMap flip() {
        return PolyMap{HoloPoly(RPoly::var_z2()), HoloPoly(RPoly::var_z1())};
    }
    static PolyMap diagonal(const GQ& a, const GQ& b) {
        return PolyMap{HoloPoly(a * RPoly::var_z1()), HoloPoly(b * RPoly::var_z2())};
    }
};

// Full model map g(z) = ('g(z1,z2), mu*z3 + phi(z1,z2)).
struct ModelMap {
    PolyMap plane;
    Rational mu = 1;
    HoloPoly phi;
};

// Formal Jacobian determinant of a plane map.
RPoly jacobian_determinant(const PolyMap& g);

// Exact composite P(g(z), conj g(z)); conjugate variables substitute by the
// conjugated components, formal parameters are self-conjugate.
RPoly substitute(const RPoly& p, const PolyMap& g);

struct SplitParts {
    RPoly p1;     // monomials in z1, cz1 alone
    RPoly mixed;  // monomials involving both variables
    RPoly p2;     // monomials in z2, cz2 alone
    GQ constant;  // reported separately
};
SplitParts split_parts(const RPoly& p);

// d^2 P / dz_j dcz_k for j,k in {1,2}.
RPoly mixed_partial(const RPoly& p, int j, int k);

// ----- inline implementations -----

inline RPoly jacobian_determinant(const PolyMap& g) {
    const RPoly& a = g.f1.poly();
    const RPoly& b = g.f2.poly();
    return a.derivative(1) * b.derivative(3) - a.derivative(3) * b.derivative(1);
}

inline RPoly substitute(const RPoly& p, const PolyMap& g) {
    const RPoly images[4] = {g.f1.poly(), g.f1.poly().conj(), g.f2.poly(),
                             g.f2.poly().conj()};
    std::map<std::pair<int, int>, RPoly> power_cache;
    auto power = [&](int v, int e) -> const RPoly& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end()) it = power_cache.emplace(key, images[v].pow(e)).first;
        return it->second;
    };
    RPoly result;
    for (auto& [m, c] : p.terms()) {
        Monomial param_part;
        param_part.params = m.params;
        RPoly term(c, param_part);
        if (m.j1 > 0) term *= power(0, m.j1);
        if (m.k1 > 0) term *= power(1, m.k1);
        if (m.j2 > 0) term *= power(2, m.j2);
        if (m.k2 > 0) term *= power(3, m.k2);
        result += term;
    }
    return result;
}

inline SplitParts split_parts(const RPoly& p) {
    SplitParts out;
    for (auto& [m, c] : p.terms()) {
        if (m.is_var_constant())
            out.constant += c;
        else if (!m.involves_z2())
            out.p1.add_term(m, c);
        else if (!m.involves_z1())
            out.p2.add_term(m, c);
        else
            out.mixed.add_term(m, c);
    }
    return out;
}

inline RPoly mixed_partial(const RPoly& p, int j, int k) {
    if ((j != 1 && j != 2) || (k != 1 && k != 2))
        throw std::invalid_argument("mixed_partial indices must be 1 or 2");
    return p.derivative(j == 1 ? 1 : 3).derivative(k == 1 ? 2 : 4);
}

}  // namespace modelkit
