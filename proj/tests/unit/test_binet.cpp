#include "doctest.h"

#include <random>

#include "ogf/binet.hpp"
#include "ogf/series.hpp"

using namespace ogf;

namespace {
std::vector<Polynomial> constant_rows(long p1, long p2, int order) {
    FamilySpec spec;
    spec.P = {Polynomial(p1), Polynomial(p2)};
    spec.truncation = order;
    return expand_Y(spec).coefficients();
}

std::vector<Polynomial> constant_s_rows(long p1, long p2, long q0, long q1, int order) {
    FamilySpec spec;
    spec.P = {Polynomial(p1), Polynomial(p2)};
    spec.Q = {Polynomial(q0), Polynomial(q1)};
    spec.truncation = order;
    return expand_S(spec).coefficients();
}
} // namespace

TEST_CASE("quadratic root data satisfies Vieta's relations") {
    // Roots of the denominator polynomial itself: p2 (w - a1)(w - a2) = 1 + p1 w + p2 w^2,
    // so a1 + a2 = -p1/p2 and a1 a2 = 1/p2.
    QuadraticRootData roots = quadratic_roots(Rational(-1), Rational(-1));
    CHECK(roots.a1 + roots.a2 == SurdElement(-roots.p1 / roots.p2));
    CHECK(roots.a1 * roots.a2 == SurdElement(Rational(1) / roots.p2));
    CHECK(roots.discriminant == Rational(5));
    CHECK(roots.sqrt_disc * roots.sqrt_disc == SurdElement(Rational(5)));
    CHECK(roots.a1 != roots.a2);

    // rational coefficients stay exact
    QuadraticRootData r2 = quadratic_roots(Rational(1, 2), Rational(-3, 4));
    CHECK(r2.a1 + r2.a2 == SurdElement(Rational(2, 3)));
    CHECK(r2.a1 * r2.a2 == SurdElement(Rational(-4, 3)));
}

TEST_CASE("root extraction rejects degenerate denominators") {
    CHECK_THROWS_AS(quadratic_roots(Rational(3), Rational(0)), Error);
    try {
        quadratic_roots(Rational(3), Rational(0));
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_denominator);
    }
    try {
        quadratic_roots(Rational(-2), Rational(1)); // discriminant 0
    } catch (const Error& e) {
        CHECK(e.code() == errc::repeated_root);
    }
    try {
        quadratic_roots(Rational(1), Rational(1)); // discriminant -3
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_real_surd);
    }
}

TEST_CASE("two-term closed form reproduces Fibonacci-type sequences") {
    // 1/(1 - w - w^2): shifted Fibonacci numbers
    const long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (unsigned n = 0; n <= 10; ++n) {
        SurdElement value = binet_Y2(Rational(-1), Rational(-1), n);
        CHECK(value.is_rational());
        CHECK(value.rational_part() == Rational(fib[n]));
    }
    CHECK(binet_Y2(Rational(-1), Rational(-1), 8).rational_part() == Rational(34));

    // 1/(1 - 4w + w^2): Chebyshev U_n evaluated at 2 (discriminant 12)
    const long cheb_at_two[] = {1, 4, 15, 56, 209};
    for (unsigned n = 0; n <= 4; ++n) {
        SurdElement value = binet_Y2(Rational(-4), Rational(1), n);
        CHECK(value.is_rational());
        CHECK(value.rational_part() == Rational(cheb_at_two[n]));
    }

    CHECK(binet_Y2(Rational(7), Rational(3), 0).rational_part() == Rational(1));
}

TEST_CASE("closed form agrees with the division oracle on random integer data") {
    std::mt19937 rng(7501);
    std::uniform_int_distribution<long> coeff(-6, 6);
    int accepted = 0;
    while (accepted < 40) {
        long p1 = coeff(rng);
        long p2 = coeff(rng);
        if (p2 == 0) continue;
        long disc = p1 * p1 - 4 * p2;
        if (disc <= 0) continue;
        long root = 0;
        while (root * root < disc) ++root;
        if (root * root == disc) continue; // want a genuine surd extension
        ++accepted;
        std::vector<Polynomial> y = constant_rows(p1, p2, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            SurdElement value = binet_Y2(Rational(p1), Rational(p2), n);
            CHECK(value.surd_part() == Rational(0));
            CHECK(value.rational_part() == y[n].constant_value());
        }
    }
}

TEST_CASE("numerator-weighted closed form") {
    // Lucas numbers: (2 - w)/(1 - w - w^2)
    const long lucas[] = {2, 1, 3, 4, 7, 11, 18, 29};
    for (unsigned n = 0; n <= 7; ++n) {
        SurdElement value = binet_S2(Rational(-1), Rational(-1), Rational(2), Rational(-1), n);
        CHECK(value.is_rational());
        CHECK(value.rational_part() == Rational(lucas[n]));
    }

    CHECK(binet_S2(Rational(-1), Rational(-1), Rational(0), Rational(1), 7).rational_part() ==
          Rational(13)); // w/(1 - w - w^2): Fibonacci with its standard offset
    CHECK(binet_S2(Rational(-2), Rational(-1), Rational(1), Rational(1), 3).rational_part() ==
          Rational(17)); // Pell-type numerator mix: s = 1,3,7,17
    CHECK(binet_S2(Rational(-2), Rational(-1), Rational(0), Rational(1), 4).rational_part() ==
          Rational(12)); // Pell numbers 0,1,2,5,12

    std::mt19937 rng(7502);
    std::uniform_int_distribution<long> coeff(-5, 5);
    int accepted = 0;
    while (accepted < 25) {
        long p1 = coeff(rng), p2 = coeff(rng), q0 = coeff(rng), q1 = coeff(rng);
        if (p2 == 0) continue;
        long disc = p1 * p1 - 4 * p2;
        if (disc <= 0) continue;
        long root = 0;
        while (root * root < disc) ++root;
        if (root * root == disc) continue;
        ++accepted;
        std::vector<Polynomial> s = constant_s_rows(p1, p2, q0, q1, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            SurdElement value = binet_S2(Rational(p1), Rational(p2), Rational(q0), Rational(q1), n);
            CHECK(value.surd_part() == Rational(0));
            CHECK(value.rational_part() == s[n].constant_value());
        }
    }
}

TEST_CASE("repeated root falls back to the series engine") {
    // 1/(1 - 2w + w^2) = 1/(1-w)^2 has a double root: the closed form must
    // refuse, and the series route gives n+1.
    CHECK_THROWS_AS(binet_Y2(Rational(-2), Rational(1), 2), Error);
    try {
        binet_Y2(Rational(-2), Rational(1), 2);
    } catch (const Error& e) {
        CHECK(e.code() == errc::repeated_root);
    }
    std::vector<Polynomial> y = constant_rows(-2, 1, 8);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(y[n].constant_value() == Rational(static_cast<long>(n) + 1));
}

TEST_CASE("perfect-square discriminants stay rational") {
    // 1/(1 - 3w + 2w^2) = 1/((1-w)(1-2w)): y_n = 2^{n+1} - 1
    for (unsigned n = 0; n <= 10; ++n) {
        SurdElement value = binet_Y2(Rational(-3), Rational(2), n);
        CHECK(value.is_rational());
        CHECK(value.rational_part() == Rational((Int(1) << (n + 1)) - 1));
    }
}

TEST_CASE("doubled-Fibonacci auxiliary sequence") {
    // g_m = 1, 3, 7, 17, 41, ... : g_m = 2 g_{m-1} + g_{m-2}
    const long gm[] = {1, 3, 7, 17, 41, 99, 239};
    for (unsigned m = 0; m <= 6; ++m) CHECK(closed_form_gm(m) == Rational(gm[m]));

    std::vector<Polynomial> s = constant_s_rows(-2, -1, 1, 1, 10);
    for (unsigned m = 0; m <= 10; ++m) CHECK(closed_form_gm(m) == s[m].constant_value());
}
