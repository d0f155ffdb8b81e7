#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modelkit/poly.hpp"

namespace modelkit {

// ---------------------------------------------------------------------------
// Exact multivariate division helpers (used by the Im-expansion and by the
// fraction-free determinant below).
// ---------------------------------------------------------------------------

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    if (a.j1 > b.j1 || a.k1 > b.k1 || a.j2 > b.j2 || a.k2 > b.k2) return false;
    for (auto& [name, e] : a.params) {
        auto it = b.params.find(name);
        if (it == b.params.end() || it->second < e) return false;
    }
    return true;
}

inline Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    Monomial q(b.j1 - a.j1, b.k1 - a.k1, b.j2 - a.j2, b.k2 - a.k2);
    q.params = b.params;
    for (auto& [name, e] : a.params) {
        auto it = q.params.find(name);
        it->second -= e;
        if (it->second == 0) q.params.erase(it);
    }
    return q;
}

// Exact quotient num/den; nullopt when den does not divide num.
inline std::optional<RPoly> exact_divide(const RPoly& num, const RPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    RPoly rem = num;
    RPoly quot;
    const auto& lead = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& top = *rem.terms().rbegin();
        if (!monomial_divides(lead.first, top.first)) return std::nullopt;
        Monomial qm = monomial_quotient(top.first, lead.first);
        GQ qc = top.second / lead.second;
        RPoly qt(qc, qm);
        quot += qt;
        rem -= qt * den;
    }
    return quot;
}

// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
inline RPoly poly_determinant(std::vector<std::vector<RPoly>> m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("non-square matrix");
    if (n == 0) return RPoly::one();
    RPoly prev = RPoly::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return RPoly::zero();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                RPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw std::logic_error("Bareiss division failed");
                m[i][j] = std::move(*q);
            }
        prev = m[k][k];
    }
    RPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

// Resultant of f and g with respect to z1 (var=1) or z2 (var=2), an RPoly in
// the remaining letters; zero iff f and g share a factor involving that letter
// (over the fraction field of the other variables).
inline RPoly sylvester_resultant(const RPoly& f, const RPoly& g, int var) {
    if (var != 1 && var != 2) throw std::invalid_argument("var must be 1 or 2");
    auto deg_in = [var](const RPoly& p) {
        int d = 0;
        for (auto& [m, _] : p.terms()) d = std::max(d, var == 1 ? m.j1 : m.j2);
        return d;
    };
    auto coeff_of = [var](const RPoly& p, int e) {
        RPoly c;
        for (auto& [m, coef] : p.terms()) {
            if ((var == 1 ? m.j1 : m.j2) != e) continue;
            Monomial rest = m;
            (var == 1 ? rest.j1 : rest.j2) = 0;
            c.add_term(rest, coef);
        }
        return c;
    };
    int df = deg_in(f), dg = deg_in(g);
    if (df == 0 && dg == 0) throw std::invalid_argument("both inputs constant in the variable");
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<RPoly>> s(n, std::vector<RPoly>(n));
    for (int r = 0; r < dg; ++r)
        for (int e = 0; e <= df; ++e) s[r][r + df - e] = coeff_of(f, e);
    for (int r = 0; r < df; ++r)
        for (int e = 0; e <= dg; ++e) s[dg + r][r + dg - e] = coeff_of(g, e);
    return poly_determinant(std::move(s));
}

// ---------------------------------------------------------------------------
// Pluriharmonic extraction
// ---------------------------------------------------------------------------

struct PluriharmonicSplit {
    HoloPoly q;
    RPoly core;  // no pure monomials, no constant
};

// p = 2 Re q + core for real-valued p.
inline PluriharmonicSplit pluriharmonic_split(const RPoly& p) {
    if (!p.is_real()) throw std::invalid_argument("pluriharmonic_split needs a real polynomial");
    RPoly q;
    RPoly core;
    for (auto& [m, c] : p.terms()) {
        if (m.is_var_constant())
            q.add_term(m, GQ(c.re / 2));  // real constant (c.im = 0 by reality)
        else if (m.is_holomorphic())
            q.add_term(m, c);
        else if (!m.is_antiholomorphic())  // anti-holomorphic terms are conj q
            core.add_term(m, c);
    }
    return PluriharmonicSplit{HoloPoly(q), core};
}

// ---------------------------------------------------------------------------
// Hermitian (D'Angelo-style) decomposition
//   p = 2 Re q + sum lambda_i |f_i|^2 - sum mu_j |g_j|^2
// ---------------------------------------------------------------------------

struct HoloDecomposition {
    HoloPoly q;
    std::vector<std::pair<Rational, HoloPoly>> plus;   // lambda > 0
    std::vector<std::pair<Rational, HoloPoly>> minus;  // mu > 0
    // Pivot order certificate: position k records the elimination step that
    // produced the k-th emitted square, witnessing triangular independence.
    std::vector<Monomial> pivots;

    RPoly reconstruct() const {
        RPoly r = two_re(q);
        for (auto& [lam, f] : plus) r += GQ(lam) * (f.poly() * f.poly().conj());
        for (auto& [mu, g] : minus) r -= GQ(mu) * (g.poly() * g.poly().conj());
        return r;
    }
};

namespace detail {

// Hermitian matrix of a mixed core: entry (u,v) is the coefficient of u*conj(v)
// for nonconstant holomorphic monomials u, v.
struct HermitianForm {
    std::vector<Monomial> basis;
    std::vector<std::vector<GQ>> h;
};

inline HermitianForm hermitian_form(const RPoly& core) {
    std::set<Monomial> holo;
    for (auto& [m, _] : core.terms()) {
        if (!m.params.empty())
            throw std::invalid_argument("holomorphic_decompose does not accept parameters");
        holo.insert(Monomial(m.j1, 0, m.j2, 0));
        holo.insert(Monomial(m.k1, 0, m.k2, 0));
    }
    HermitianForm out;
    out.basis.assign(holo.begin(), holo.end());
    std::size_t n = out.basis.size();
    out.h.assign(n, std::vector<GQ>(n, GQ(0)));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            out.h[u][v] = core.coeff(out.basis[u] * out.basis[v].conj());
    return out;
}

}  // namespace detail

inline HoloDecomposition holomorphic_decompose(const RPoly& p) {
    auto split = pluriharmonic_split(p);
    HoloDecomposition out;
    out.q = split.q;
    if (split.core.is_zero()) return out;

    auto form = detail::hermitian_form(split.core);
    std::size_t n = form.basis.size();
    auto& h = form.h;
    std::vector<RPoly> expr(n);
    for (std::size_t u = 0; u < n; ++u) expr[u] = RPoly(GQ(1), form.basis[u]);
    std::vector<std::size_t> active(n);
    for (std::size_t u = 0; u < n; ++u) active[u] = u;

    // Congruence q_v = expr_v - s*expr_u (so expr_v = q_v + s*q_u):
    // row u gains s * row v, column u gains conj(s) * column v.
    auto add_multiple = [&](std::size_t v, std::size_t u, const GQ& s) {
        for (std::size_t b : active) h[u][b] += s * h[v][b];
        for (std::size_t a : active) h[a][u] += s.conj() * h[a][v];
        expr[v] -= s * expr[u];
    };

    while (!active.empty()) {
        // Largest |Re| diagonal (diagonals are real by Hermitian symmetry).
        std::size_t pivot = n;
        Rational best = 0;
        for (std::size_t u : active) {
            Rational mag = rat_abs(h[u][u].re);
            if (mag > best) {
                best = mag;
                pivot = u;
            }
        }
        if (pivot == n) {
            // All diagonals zero: find the first nonzero off-diagonal entry
            // and create a real (or imaginary) diagonal by a column addition.
            std::size_t au = n, av = n;
            for (std::size_t i = 0; i < active.size() && au == n; ++i)
                for (std::size_t j = i + 1; j < active.size(); ++j)
                    if (!h[active[i]][active[j]].is_zero()) {
                        au = active[i];
                        av = active[j];
                        break;
                    }
            if (au == n) break;  // matrix vanished on the active block
            GQ c = h[au][av];
            // q_v = expr_v - expr_u gives diagonal 2 Re c at u; when c is
            // purely imaginary use q_v = expr_v - i*expr_u for 2 Im c.
            add_multiple(av, au, c.re != 0 ? GQ(1) : GQ::i());
            continue;
        }

        Rational d = h[pivot][pivot].re;
        RPoly f = expr[pivot];
        for (std::size_t u : active)
            if (u != pivot) f += (h[u][pivot] / GQ(d)) * expr[u];
        for (std::size_t a : active)
            for (std::size_t b : active)
                if (a != pivot && b != pivot) h[a][b] -= h[a][pivot] * h[pivot][b] / GQ(d);
        active.erase(std::find(active.begin(), active.end(), pivot));

        out.pivots.push_back(form.basis[pivot]);
        if (d > 0)
            out.plus.emplace_back(d, HoloPoly(f));
        else
            out.minus.emplace_back(-d, HoloPoly(f));
    }

    if (out.reconstruct() != p) throw std::logic_error("decomposition reconstruction failed");
    return out;
}

// ---------------------------------------------------------------------------
// Im-expansion: Q = sum_j b_j(z1, cz1) * (Im(z2 * conj p(z1)))^j
// ---------------------------------------------------------------------------

struct ImExpansion {
    bool ok = false;
    std::vector<RPoly> b;  // index j
    std::string reason;
};

// Im(z2 * conj(p(z1))) as an RPoly.
inline RPoly im_z2_conj(const HoloPoly& p) {
    RPoly w = RPoly::var_z2() * p.poly().conj();
    return GQ(Rational(0), Rational(-1, 2)) * (w - w.conj());
}

inline ImExpansion im_expansion(const RPoly& Q, const HoloPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("im_expansion with zero p");
    ImExpansion out;

    // T = Q(z1, p(z1) z2), then z2 -> u + i v with formal real u = Re z2,
    // v = Im z2. Any surviving u-dependence defeats the expansion.
    PolyMap scale{HoloPoly(RPoly::var_z1()), HoloPoly(p.poly() * RPoly::var_z2())};
    RPoly t = substitute(Q, scale);
    RPoly u = RPoly::param("__re2"), v = RPoly::param("__im2");
    PolyMap reim{HoloPoly(RPoly::var_z1()), HoloPoly(u + GQ::i() * v)};
    RPoly t2 = substitute(t, reim);

    std::vector<RPoly> a;  // coefficient of v^j
    for (auto& [m, c] : t2.terms()) {
        auto itu = m.params.find("__re2");
        if (itu != m.params.end()) {
            out.reason = "composed polynomial depends on Re z2";
            return out;
        }
        int j = 0;
        Monomial rest = m;
        auto itv = rest.params.find("__im2");
        if (itv != rest.params.end()) {
            j = itv->second;
            rest.params.erase(itv);
        }
        if (static_cast<std::size_t>(j) >= a.size()) a.resize(j + 1);
        a[j].add_term(rest, c);
    }

    RPoly norm = p.poly() * p.poly().conj();  // |p|^2
    RPoly norm_pow = RPoly::one();
    out.b.resize(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j > 0) norm_pow *= norm;
        if (a[j].is_zero()) continue;
        auto q = exact_divide(a[j], norm_pow);
        if (!q) {
            out.b.clear();
            out.reason = "coefficient of (Im z2)^" + std::to_string(j) +
                         " not divisible by |p|^" + std::to_string(2 * j);
            return out;
        }
        out.b[j] = std::move(*q);
    }

    // Exact reconstruction check.
    RPoly im_part = im_z2_conj(p);
    RPoly check;
    RPoly im_pow = RPoly::one();
    for (std::size_t j = 0; j < out.b.size(); ++j) {
        if (j > 0) im_pow *= im_part;
        check += out.b[j] * im_pow;
    }
    if (check != Q) {
        out.b.clear();
        out.reason = "reconstruction mismatch";
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace modelkit
