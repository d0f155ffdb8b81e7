#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modelkit/grading.hpp"
#include "modelkit/parser.hpp"
#include "test_util.hpp"

using namespace modelkit;
using namespace testutil;

TEST_CASE("grade: reference values") {
    Weight w = Weight::circle(1, 1);
    Grade g1 = grade(Monomial(1, 1, 0, 0), w);  // |z1|^2
    CHECK(g1.wt == 2);
    CHECK(g1.sgn == 0);
    CHECK(g1.hq == Hq::finite(1));

    Weight w13 = Weight::circle(1, 3);
    Grade g2 = grade(Monomial(3, 0, 0, 1), w13);  // z1^3 cz2
    CHECK(g2.wt == 6);
    CHECK(g2.sgn == 0);
    CHECK(g2.hq == Hq::finite(1));

    Grade g3 = grade(Monomial(2, 0, 0, 0), w);  // z1^2
    CHECK(g3.wt == 2);
    CHECK(g3.sgn == 2);
    CHECK(g3.hq.kind == Hq::Kind::PlusInfinity);

    CHECK_THROWS_AS(grade(Monomial{}, w), std::domain_error);
}

TEST_CASE("hq undefined for mixed-sign weights") {
    Weight w = Weight::circle(1, -1);
    CHECK(grade(Monomial(1, 1, 1, 1), w).hq.kind == Hq::Kind::Undefined);
}

TEST_CASE("weighted_expansion: reference values") {
    RPoly p = parse_poly("z1*cz1 + z2^2*cz2^2");
    auto e11 = weighted_expansion(p, Weight::circle(1, 1));
    REQUIRE(e11.size() == 2);
    CHECK(e11[0].first == 2);
    CHECK(e11[0].second == parse_poly("z1*cz1"));
    CHECK(e11[1].first == 4);
    CHECK(e11[1].second == parse_poly("z2^2*cz2^2"));

    auto e21 = weighted_expansion(p, Weight::circle(2, 1));
    REQUIRE(e21.size() == 1);
    CHECK(e21[0].first == 4);
    CHECK(e21[0].second == p);

    CHECK(weighted_expansion(RPoly::zero(), Weight::circle(1, 1)).empty());
}

TEST_CASE("signature_expansion: reference values and reality symmetry") {
    auto e = signature_expansion(parse_poly("z1*cz2 + cz1*z2"), Weight::circle(1, 1));
    REQUIRE(e.size() == 1);
    CHECK(e[0].first == 0);

    auto e2 = signature_expansion(parse_poly("z1^2 + cz1^2"), Weight::circle(1, 1));
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].first == -2);
    CHECK(e2[0].second == parse_poly("cz1^2"));
    CHECK(e2[1].first == 2);
    CHECK(e2[1].second == parse_poly("z1^2"));

    auto g = rng(201);
    for (int t = 0; t < 20; ++t) {
        RPoly p = random_real_poly(g, 8, 6);
        Weight w = Weight::circle(random_positive_rational(g), random_positive_rational(g));
        auto parts = signature_expansion(p, w);
        RPoly sum;
        for (auto& [sgn, part] : parts) {
            sum += part;
            // reality pairs the part at sgn with the conjugate part at -sgn
            bool found = false;
            for (auto& [sgn2, part2] : parts)
                if (sgn2 == -sgn && part2 == part.conj()) found = true;
            CHECK(found);
        }
        CHECK(sum == p);
    }
}

TEST_CASE("is_balanced for each group") {
    CHECK(is_balanced(Monomial(3, 0, 0, 1), Weight::circle(1, 3)));
    CHECK(is_balanced(Monomial(2, 0, 0, 1), Weight::integers(1, 1)));
    CHECK_FALSE(is_balanced(Monomial(2, 0, 0, 1), Weight::circle(1, 1)));
    CHECK(is_balanced(Monomial(3, 0, 0, 0), Weight::cyclic(1, 0, 3)));
    CHECK_FALSE(is_balanced(Monomial(2, 0, 0, 0), Weight::cyclic(1, 0, 3)));
}

TEST_CASE("balanced_in_variable") {
    CHECK(balanced_in_variable(Monomial(1, 1, 1, 0), 1));
    CHECK_FALSE(balanced_in_variable(Monomial(1, 0, 0, 1), 1));
    CHECK(balanced_in_variable(Monomial{}, 1));
    CHECK(balanced_in_variable(Monomial{}, 2));
}

TEST_CASE("balance_class: reference polynomials") {
    Weight w = Weight::circle(1, 1);
    CHECK(balance_class(parse_poly("z1*cz1*z2*cz2"), w).extremely_balanced);
    // Re q(z1,z2) is purely pluriharmonic, hence extremely imbalanced
    CHECK(balance_class(parse_poly("z1^2*z2 + cz1^2*cz2"), w).extremely_imbalanced);
    // hq ratios 2 and 1/2 multiply to 1
    auto bc = balance_class(parse_poly("z1^2*cz2 + cz1^2*z2"), w);
    CHECK(bc.diversely_balanced);
    CHECK_FALSE(balance_class(parse_poly("z1^2 + z1*cz1 + cz1^2"), w).diversely_balanced);
    CHECK_THROWS_AS(balance_class(parse_poly("3"), w), std::invalid_argument);
}

TEST_CASE("extremely balanced implies balanced for every weight") {
    auto g = rng(202);
    for (int t = 0; t < 20; ++t) {
        RPoly p;
        std::uniform_int_distribution<int> e(0, 3);
        for (int k = 0; k < 5; ++k) {
            int a = e(g), b = e(g);
            if (a + b == 0) continue;
            Monomial m(a, a, b, b);
            p.add_term(m, GQ(random_nonzero_rational(g)));
        }
        if (p.is_zero()) continue;
        REQUIRE(is_extremely_balanced(p));
        for (int s = 0; s < 50; ++s) {
            Weight w = Weight::circle(random_nonzero_rational(g), random_nonzero_rational(g));
            for (auto& [m, _] : p.terms()) CHECK(is_balanced(m, w));
        }
    }
}

TEST_CASE("conjugate monomial has inverse hq; sgn is hq-degree difference") {
    auto g = rng(203);
    Weight w = Weight::circle(1, 1);
    for (int t = 0; t < 100; ++t) {
        Monomial m = random_monomial(g, 4);
        if (m.is_var_constant()) continue;
        Weight wr = Weight::circle(random_positive_rational(g), random_positive_rational(g));
        Grade gr = grade(m, wr);
        Rational hol = Rational(m.j1) * wr.theta1 + Rational(m.j2) * wr.theta2;
        Rational anti = Rational(m.k1) * wr.theta1 + Rational(m.k2) * wr.theta2;
        CHECK(gr.sgn == hol - anti);
        CHECK(grade(m.conj(), wr).hq == gr.hq.inverse());
    }
    (void)w;
}

TEST_CASE("s_w_set: reference sets and inversion symmetry") {
    Weight w = Weight::circle(1, 1);
    auto s2 = s_w_set(2, w);
    CHECK(s2 == std::set<Hq>{Hq::plus_inf(), Hq::finite(1), Hq::minus_inf()});
    auto s1 = s_w_set(1, w);
    CHECK(s1 == std::set<Hq>{Hq::plus_inf(), Hq::minus_inf()});
    auto s3 = s_w_set(3, w);
    CHECK(s3 == std::set<Hq>{Hq::plus_inf(), Hq::finite(2), Hq::finite(Rational(1, 2)),
                             Hq::minus_inf()});

    auto g = rng(204);
    for (int t = 0; t < 20; ++t) {
        Weight wr = Weight::circle(Rational(1 + int(g() % 3)), Rational(1 + int(g() % 3)));
        Rational W = Rational(1 + int(g() % 6));
        auto s = s_w_set(W, wr);
        for (auto& h : s) CHECK(s.count(h.inverse()) == 1);
    }
    CHECK_THROWS_AS(s_w_set(2, Weight::circle(1, -1)), std::invalid_argument);
}

TEST_CASE("completely_diversely_balanced") {
    Weight w = Weight::circle(1, 1);
    // (Re z1)^2 = (z1^2 + 2|z1|^2 + cz1^2) / 4
    RPoly re2 = parse_poly("1/4*z1^2 + 1/2*z1*cz1 + 1/4*cz1^2");
    CHECK(completely_diversely_balanced(re2, w));
    CHECK_FALSE(completely_diversely_balanced(parse_poly("z1*cz1"), w));
    CHECK_FALSE(completely_diversely_balanced(parse_poly("z1^2 + cz1^2"), w));
    CHECK_THROWS_AS(completely_diversely_balanced(parse_poly("z1*cz1 + z2"), w),
                    std::invalid_argument);
}

TEST_CASE("weighted expansion parts are grade fibers") {
    auto g = rng(205);
    for (int t = 0; t < 20; ++t) {
        RPoly p = random_poly(g, 10, 6);
        Weight w = Weight::circle(random_positive_rational(g), random_positive_rational(g));
        RPoly sum;
        for (auto& [wt, part] : weighted_expansion(p, w)) {
            sum += part;
            for (auto& [m, _] : part.terms()) CHECK(monomial_weight(m, w) == wt);
        }
        CHECK(sum == p);
    }
}
