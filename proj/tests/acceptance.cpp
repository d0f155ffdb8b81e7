// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <iostream>
#include <string>

#include "modelkit/decomposition.hpp"
#include "modelkit/flows.hpp"
#include "modelkit/grading.hpp"
#include "modelkit/parser.hpp"
#include "modelkit/symmetry.hpp"
#include "test_util.hpp"

using namespace modelkit;
using namespace testutil;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    if (!ok) ++failures;
}

// 1. 300 random decompositions reconstruct exactly, under 30 seconds total.
void criterion_1() {
    auto g = rng(9001);
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int t = 0; t < 300; ++t) {
        RPoly p = random_real_poly(g, 20, 8);  // up to 40 terms after conjugate closure
        auto d = holomorphic_decompose(p);
        if (d.reconstruct() != p) ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) ok = false;
    report(1, ok, "300 exact decomposition round-trips in " + std::to_string(secs) + " s");
}

// 2. Inertia is invariant under invertible Gaussian-rational basis changes.
void criterion_2() {
    auto g = rng(9002);
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
        RPoly p = random_real_poly(g, 8, 6, /*mixed_only=*/true, 4);
        auto d = holomorphic_decompose(p);
        GQ a, b, c, dd;
        do {
            a = random_gq(g, 3);
            b = random_gq(g, 3);
            c = random_gq(g, 3);
            dd = random_gq(g, 3);
        } while ((a * dd - b * c).is_zero());
        PolyMap lin{HoloPoly(a * RPoly::var_z1() + b * RPoly::var_z2()),
                    HoloPoly(c * RPoly::var_z1() + dd * RPoly::var_z2())};
        auto d2 = holomorphic_decompose(substitute(p, lin));
        if (d.plus.size() != d2.plus.size() || d.minus.size() != d2.minus.size()) ok = false;
    }
    report(2, ok, "100 inertia counts preserved by invertible basis changes");
}

// 3. Hermite-kernel torus rank equals brute-force search over [-6,6]^2.
void criterion_3() {
    auto g = rng(9003);
    bool ok = true;
    for (int t = 0; t < 200; ++t) {
        RPoly p = random_real_poly(g, 8, 12);  // exponents <= 3 via monomial filter below
        RPoly q;
        std::uniform_int_distribution<int> e(0, 3);
        for (int k = 0; k < 4; ++k) {
            Monomial m(e(g), e(g), e(g), e(g));
            if (m.is_var_constant()) continue;
            GQ c = random_gq(g, 4);
            q.add_term(m, c);
            q.add_term(m.conj(), c.conj());
        }
        if (q.is_zero()) continue;
        auto kernel = torus_weights(q);
        auto rows = rotation_constraint_rows(q);
        for (long a = -6; a <= 6 && ok; ++a)
            for (long b = -6; b <= 6; ++b) {
                bool ann = true;
                for (auto& r : rows)
                    if (r[0] * a + r[1] * b != 0) ann = false;
                if (ann != kernel.contains(a, b)) {
                    ok = false;
                    break;
                }
            }
        (void)p;
    }
    report(3, ok, "200 torus kernels match the brute-force box search");
}

// 4. Grading consistency plus the extremely-balanced / is_balanced link.
void criterion_4() {
    auto g = rng(9004);
    bool ok = true;
    for (int t = 0; t < 500; ++t) {
        Monomial m = random_monomial(g, 5);
        if (m.is_var_constant()) continue;
        Weight w = Weight::circle(random_positive_rational(g), random_positive_rational(g));
        Grade gr = grade(m, w);
        Rational hol = Rational(m.j1) * w.theta1 + Rational(m.j2) * w.theta2;
        Rational anti = Rational(m.k1) * w.theta1 + Rational(m.k2) * w.theta2;
        if (gr.sgn != hol - anti) ok = false;
        if (grade(m.conj(), w).hq != gr.hq.inverse()) ok = false;
    }
    std::uniform_int_distribution<int> e(0, 3);
    for (int t = 0; t < 10; ++t) {
        RPoly p;
        for (int k = 0; k < 5; ++k) {
            int a = e(g), b = e(g);
            if (a + b == 0) continue;
            p.add_term(Monomial(a, a, b, b), GQ(random_nonzero_rational(g)));
        }
        if (p.is_zero()) continue;
        if (!is_extremely_balanced(p)) ok = false;
        for (int s = 0; s < 50; ++s) {
            Weight w = Weight::circle(random_nonzero_rational(g), random_nonzero_rational(g));
            for (auto& [m, _] : p.terms())
                if (!is_balanced(m, w)) ok = false;
        }
    }
    report(4, ok, "500 grading identities and 50-weight extremely-balanced checks");
}

// 5. Rotation-field invariance is equivalent to the integer constraint rows.
void criterion_5() {
    auto g = rng(9005);
    bool ok = true;
    std::uniform_int_distribution<int> ab(-3, 3);
    for (int t = 0; t < 100; ++t) {
        RPoly p = random_real_poly(g, 10, 6);
        auto rows = rotation_constraint_rows(p);
        for (int s = 0; s < 5; ++s) {
            Rational alpha = ab(g), beta = ab(g);
            bool invariant =
                invariance_constraint(p, rotation_field(alpha, beta)).kind ==
                InvarianceResult::Kind::Invariant;
            bool ann = true;
            for (auto& r : rows)
                if (Rational(r[0]) * alpha + Rational(r[1]) * beta != 0) ann = false;
            if (invariant != ann) ok = false;
        }
    }
    report(5, ok, "100 rotation fields agree with the constraint-row criterion");
}

// 6. Generated normal-form families land in exactly one classifier case.
void criterion_6() {
    auto g = rng(9006);
    bool ok = true;
    auto check = [&](const RPoly& P, ClassificationReport::Case3 expect) {
        ModelDomain d(P);
        auto rep = classify(d);
        if (!rep.finite_type.pass) {
            ok = false;
            return;
        }
        bool g1 = rep.translations[0].genuine, g2 = rep.translations[1].genuine;
        bool has10 = rep.torus.contains(1, 0), has01 = rep.torus.contains(0, 1);
        bool extreme = is_extremely_balanced(P);
        bool p1 = g1 && g2;
        bool p2 = (g1 && !g2 && has01) || (g2 && !g1 && has10);
        bool p3 = extreme && !g1 && !g2;
        if (int(p1) + int(p2) + int(p3) != 1) ok = false;
        if (rep.thm3_case != expect) ok = false;
    };
    for (int t = 0; t < 50; ++t) {
        RPoly u = im_var(1), v = im_var(2);
        RPoly tube = GQ(random_positive_rational(g)) * (u * u) +
                     GQ(random_positive_rational(g)) * (v * v) +
                     GQ(random_positive_rational(g)) * (u * u * v * v);
        check(tube, ClassificationReport::Case3::I);

        RPoly mixed = GQ(random_positive_rational(g)) * (u * u) +
                      GQ(random_positive_rational(g)) * (abs2_var(2) * abs2_var(2)) +
                      GQ(random_positive_rational(g)) * (u * u * abs2_var(2));
        check(mixed, ClassificationReport::Case3::II);

        RPoly r1 = abs2_var(1), r2 = abs2_var(2);
        RPoly reinhardt = GQ(random_positive_rational(g)) * r1 +
                          GQ(random_positive_rational(g)) * (r1 * r1) +
                          GQ(random_positive_rational(g)) * r2 +
                          GQ(random_positive_rational(g)) * (r2 * r2) +
                          GQ(random_positive_rational(g)) * (r1 * r2);
        check(reinhardt, ClassificationReport::Case3::III);
    }
    report(6, ok, "3 x 50 normal-form families classified into exactly one case");
}

// 7. A z2-pure monomial always excludes type 5 with the contradiction certificate.
void criterion_7() {
    auto g = rng(9007);
    bool ok = true;
    std::uniform_int_distribution<int> e(1, 4);
    for (int t = 0; t < 100; ++t) {
        RPoly p = abs2_var(1) + abs2_var(2) + random_real_poly(g, 4, 4, /*mixed_only=*/true, 3);
        int k = e(g);
        GQ c = random_nonzero_gq(g, 3);
        p.add_term(Monomial(0, 0, k, 0), c);
        p.add_term(Monomial(0, 0, 0, k), c.conj());
        auto flows = admissible_flow_types(p);
        auto& t5 = flows.find("type5");
        if (t5.admissible) ok = false;
        if (t5.certificate.find("contradiction") == std::string::npos) ok = false;
        if (t5.certificate.find("z2") == std::string::npos) ok = false;
    }
    report(7, ok, "100 type-5 exclusions carry the vanishing-coefficient certificate");
}

// 8. Commuting diagonalizable pairs are simultaneously diagonalized; controls rejected.
void criterion_8() {
    auto g = rng(9008);
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
        GQ sa, sb, sc, sd;
        do {
            sa = random_gq(g, 3);
            sb = random_gq(g, 3);
            sc = random_gq(g, 3);
            sd = random_gq(g, 3);
        } while ((sa * sd - sb * sc).is_zero());
        Mat2 s{sa, sb, sc, sd};
        Mat2 si = s.inverse();
        Mat2 d1{random_gq(g, 4), GQ(0), GQ(0), random_gq(g, 4)};
        Mat2 d2{random_gq(g, 4), GQ(0), GQ(0), random_gq(g, 4)};
        Mat2 a = s * d1 * si, b = s * d2 * si;
        Mat2 h = simultaneous_diagonalize(a, b);
        Mat2 hi = h.inverse();
        if (!(hi * a * h).is_diagonal() || !(hi * b * h).is_diagonal()) ok = false;
    }
    bool rejected = false;
    try {
        simultaneous_diagonalize(Mat2{GQ(0), GQ(1), GQ(0), GQ(0)}, Mat2::identity());
    } catch (const std::domain_error&) {
        rejected = true;
    }
    if (!rejected) ok = false;
    rejected = false;
    try {
        simultaneous_diagonalize(Mat2{GQ(0), GQ(1), GQ(0), GQ(0)},
                                 Mat2{GQ(0), GQ(0), GQ(1), GQ(0)});
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) ok = false;
    report(8, ok, "100 commuting pairs diagonalized; nilpotent and non-commuting rejected");
}

// 9. Map verification: flip, affine shift, and rotation symmetries; perturbed controls fail.
void criterion_9() {
    auto g = rng(9009);
    bool ok = true;

    ModelDomain ball(abs2_var(1) + abs2_var(2));
    ModelMap flip;
    flip.plane = PolyMap::flip();
    if (!verify_model_map(ball, flip).pass) ok = false;

    ModelDomain resq(re_var(1) * re_var(1) + abs2_var(2));
    ModelMap shift;
    shift.plane = PolyMap{HoloPoly(parse_poly("z1 + 1")), HoloPoly(RPoly::var_z2())};
    shift.phi = HoloPoly(parse_poly("-z1 - 1/2"));
    if (!verify_model_map(resq, shift).pass) ok = false;

    const GQ units[] = {GQ(1), GQ::i(), GQ(-1), -GQ::i()};
    std::uniform_int_distribution<int> e(0, 2);
    for (int t = 0; t < 20; ++t) {
        long a = g() % 4, b = g() % 4;
        RPoly p = abs2_var(1) + abs2_var(2);
        for (int k = 0; k < 4; ++k) {
            Monomial m(e(g), e(g), e(g), e(g));
            if (m.is_var_constant() || m.is_pure()) continue;
            if (((m.j1 - m.k1) * a + (m.j2 - m.k2) * b) % 4 != 0) continue;
            GQ c = random_gq(g, 3);
            p.add_term(m, c);
            p.add_term(m.conj(), c.conj());
        }
        ModelDomain d(p);
        ModelMap rot;
        rot.plane = PolyMap::diagonal(units[a], units[b]);
        if (!verify_model_map(d, rot).pass) ok = false;

        ModelMap bad;
        bad.plane = PolyMap::diagonal(GQ(2) * units[a], units[b]);
        auto vr = verify_model_map(d, bad);
        if (vr.pass || vr.residual.is_zero()) ok = false;
    }
    report(9, ok, "flip, shift, and 20 rotation symmetries verified; 20 controls fail");
}

// 10. Forward-built Im-expansions are recovered; Re z2 injections are rejected.
void criterion_10() {
    auto g = rng(9010);
    bool ok = true;
    std::uniform_int_distribution<int> e(0, 2);
    auto random_p = [&] {
        RPoly praw;
        for (int k = 0; k <= 2; ++k) praw.add_term(Monomial(k, 0, 0, 0), random_gq(g, 3));
        if (praw.is_zero()) praw = RPoly::var_z1();
        return HoloPoly(praw);
    };
    for (int t = 0; t < 50; ++t) {
        HoloPoly p = random_p();
        RPoly im_part = im_z2_conj(p);
        RPoly q;
        std::vector<RPoly> b(3);
        RPoly im_pow = RPoly::one();
        for (int j = 0; j < 3; ++j) {
            if (j > 0) im_pow *= im_part;
            RPoly bj;
            for (int k = 0; k < 2; ++k) {
                Monomial m(e(g), e(g), 0, 0);
                GQ c = random_gq(g, 3);
                bj.add_term(m, c);
                bj.add_term(m.conj(), c.conj());
            }
            b[j] = bj;
            q += bj * im_pow;
        }
        auto exp = im_expansion(q, p);
        if (!exp.ok) {
            ok = false;
            continue;
        }
        RPoly back;
        RPoly pow = RPoly::one();
        for (std::size_t j = 0; j < exp.b.size(); ++j) {
            if (j > 0) pow *= im_part;
            back += exp.b[j] * pow;
        }
        if (back != q) ok = false;
    }
    for (int t = 0; t < 20; ++t) {
        HoloPoly p = random_p();
        RPoly q = im_z2_conj(p) * im_z2_conj(p) + GQ(Rational(1 + int(g() % 5))) * re_var(2);
        if (im_expansion(q, p).ok) ok = false;
    }
    report(10, ok, "50 Im-expansions recovered exactly; 20 Re z2 injections rejected");
}

// 11. Completely-diversely-balanced worked example.
void criterion_11() {
    Weight w = Weight::circle(1, 1);
    RPoly re2 = re_var(1) * re_var(1);
    bool ok = completely_diversely_balanced(re2, w) &&
              !completely_diversely_balanced(abs2_var(1), w);
    report(11, ok, "(Re z1)^2 is completely diversely balanced at (1,1); |z1|^2 is not");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
