#include "doctest.h"

#include <random>

#include "ogf/rational.hpp"
#include "ogf/surd.hpp"

using namespace ogf;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 7) * Rational(1, 1) == Rational(1));
    CHECK(Rational(7, 7).denominator() == 1); // stored reduced
    CHECK_THROWS_AS(Rational(3, 4) / Rational(0), Error);
    CHECK(Rational(-4, -6) == Rational(2, 3)); // denominator normalized positive
    CHECK(Rational(2, 3).denominator() == 3);
    CHECK(Rational(0, 5) == Rational());
}

TEST_CASE("rational construction and text form") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK(Rational(5, 10).to_string() == "1/2");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::from_string(Rational(22, 7).to_string()) == Rational(22, 7));
    CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
    CHECK_THROWS_AS(Rational::from_string("x"), Error);
    CHECK_THROWS_AS(Rational::from_string(""), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational powers, ordering, conversions") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), Error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2) < Rational(0));
    CHECK(Rational(6, 3).to_long() == 2);
    CHECK_THROWS_AS(Rational(1, 2).to_long(), Error);
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(1, 2).abs() == Rational(1, 2));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
}

TEST_CASE("rational ring axioms on random instances") {
    std::mt19937 rng(7101);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("surd arithmetic in a fixed extension") {
    SurdElement one_plus(Rational(1), Rational(1), Rational(5));
    SurdElement one_minus(Rational(1), Rational(-1), Rational(5));
    CHECK(one_plus * one_minus == SurdElement(Rational(-4))); // conjugate product 1 - 5
    CHECK((one_plus * one_minus).is_rational());

    SurdElement root2 = SurdElement::sqrt(Rational(2));
    CHECK(root2 * root2 == SurdElement(Rational(2)));

    SurdElement quotient = SurdElement(Rational(1)) / one_plus;
    CHECK(quotient == SurdElement(Rational(-1, 4), Rational(1, 4), Rational(5)));
    CHECK(quotient * one_plus == SurdElement(Rational(1))); // multiply back

    CHECK(one_plus.conjugate() == one_minus);
    CHECK(one_plus.norm() == Rational(-4));
    CHECK(one_plus + one_minus == SurdElement(Rational(2)));
    CHECK(one_plus.pow(2) == SurdElement(Rational(6), Rational(2), Rational(5)));
    CHECK(one_plus.pow(0) == SurdElement(Rational(1)));
}

TEST_CASE("surd normalization and error taxonomy") {
    // perfect-square radicand folds into the rational part
    CHECK(SurdElement::sqrt(Rational(9)) == SurdElement(Rational(3)));
    CHECK(SurdElement::sqrt(Rational(4, 9)) == SurdElement(Rational(2, 3)));
    CHECK(SurdElement(Rational(1), Rational(0), Rational(7)).is_rational());
    CHECK(SurdElement(Rational(1), Rational(0), Rational(7)).radicand() == Rational(0));

    CHECK_THROWS_AS(SurdElement::sqrt(Rational(-1)), Error);
    SurdElement root2 = SurdElement::sqrt(Rational(2));
    SurdElement root3 = SurdElement::sqrt(Rational(3));
    CHECK_THROWS_AS(root2 + root3, Error);       // field mismatch
    CHECK_THROWS_AS(root2 / SurdElement(), Error); // divide by zero
    // rational elements combine with any radicand
    CHECK(SurdElement(Rational(2)) + root3 == SurdElement(Rational(2), Rational(1), Rational(3)));
}

TEST_CASE("surd floating approximation") {
    CHECK(SurdElement::sqrt(Rational(5)).to_double(53) ==
          doctest::Approx(2.2360679774997896).epsilon(1e-14));
    SurdElement mu2(Rational(3, 2), Rational(-1, 2), Rational(5)); // (3 - sqrt 5)/2
    CHECK(mu2.to_double() == doctest::Approx(0.3819660112501051).epsilon(1e-14));
    CHECK(SurdElement(Rational(0), Rational(0), Rational(5)).to_double() == 0.0);
    CHECK(SurdElement(Rational(-7, 3)).to_double() == doctest::Approx(-7.0 / 3.0));
}

TEST_CASE("surd to_string forms") {
    CHECK(SurdElement(Rational(1), Rational(1), Rational(5)).to_string() == "1 + 1*sqrt(5)");
    CHECK(SurdElement(Rational(1), Rational(-1, 2), Rational(5)).to_string() ==
          "1 - 1/2*sqrt(5)");
    CHECK(SurdElement(Rational(3, 4)).to_string() == "3/4");
}
