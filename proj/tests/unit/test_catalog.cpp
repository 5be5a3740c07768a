#include "doctest.h"

#include "ogf/catalog.hpp"
#include "ogf/errors.hpp"

using namespace ogf;

namespace {
/// Smallest legal parameter assignment for entries whose parameters carry
/// no default.  Entries not listed run on their declared defaults.
ParamMap minimal_params(const std::string& name) {
    if (name == "chebyshev_2orthogonal") return {{"a", Rational(1, 2)}, {"g", Rational(-1, 3)}};
    if (name == "humbert") return {{"m", Rational(3)}, {"beta", Rational(1, 2)}};
    if (name == "gegenbauer") return {{"beta", Rational(1, 2)}};
    if (name == "jacobi_special") return {{"beta", Rational(1, 2)}};
    if (name == "simsek") return {{"lambda", Rational(2)}};
    return {};
}

void expect_invalid(const std::string& name, const ParamMap& params) {
    bool threw = false;
    try {
        catalog_eval(name, params, 0, 3);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == errc::invalid_parameter);
    }
    CHECK(threw);
}
} // namespace

TEST_CASE("registry lookup") {
    CHECK(catalog_lookup("fibonacci_poly").name == "fibonacci_poly");
    CHECK_FALSE(catalog_lookup("pell").summary.empty());
    CHECK_THROWS_AS(catalog_lookup("nosuch"), Error);
    try {
        catalog_lookup("nosuch");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_entry);
    }
    CHECK(catalog_entries().size() >= 30);
    for (const CatalogEntry& e : catalog_entries()) {
        CHECK_FALSE(e.name.empty());
        CHECK_FALSE(e.summary.empty());
        CHECK_FALSE(e.provenance.empty());
        CHECK(bool(e.expand));
        // reference formula and its description travel together
        CHECK(bool(e.cross_check) == !e.cross_check_doc.empty());
    }
}

TEST_CASE("frozen sequence rows") {
    std::vector<Polynomial> pell = catalog_eval("pell", {}, 0, 5);
    const long want_pell[] = {0, 1, 2, 5, 12, 29};
    for (unsigned n = 0; n <= 5; ++n) CHECK(pell[n] == Polynomial(want_pell[n]));

    std::vector<Polynomial> legendre = catalog_eval("legendre", {}, 0, 2);
    CHECK(legendre[2].to_string() == "3/2*x1^2 - 1/2");

    std::vector<Polynomial> words = catalog_eval("words_no_factor", {{"m", Rational(2)}}, 0, 4);
    const long want_words[] = {1, 2, 3, 5, 8};
    for (unsigned n = 0; n <= 4; ++n) CHECK(words[n] == Polynomial(want_words[n]));

    // Chebyshev U_n(1) = n + 1
    std::vector<Polynomial> cheb = catalog_eval("chebyshev_U", {}, 0, 12);
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(cheb[n].eval({{1, Rational(1)}}) == Rational(static_cast<long>(n) + 1));

    // triangular numbers from the polygonal family at j = 3
    std::vector<Polynomial> tri = catalog_eval("jgonal", {{"j", Rational(3)}}, 0, 5);
    const long want_tri[] = {0, 1, 3, 6, 10, 15};
    for (unsigned n = 0; n <= 5; ++n) CHECK(tri[n] == Polynomial(want_tri[n]));
}

TEST_CASE("offset windows slice the same sequence") {
    std::vector<Polynomial> all = catalog_eval("pell", {}, 0, 9);
    std::vector<Polynomial> window = catalog_eval("pell", {}, 4, 9);
    REQUIRE(window.size() == 6);
    for (unsigned i = 0; i < window.size(); ++i) CHECK(window[i] == all[4 + i]);
}

TEST_CASE("every entry passes its own reference formula") {
    // catalog_eval re-derives each requested coefficient through the entry's
    // independent formula when one is registered and raises on mismatch, so
    // a plain evaluation sweep is itself the regression.
    for (const CatalogEntry& e : catalog_entries()) {
        INFO(e.name);
        std::vector<Polynomial> values = catalog_eval(e.name, minimal_params(e.name), 0, 8);
        CHECK(values.size() == 9);
        if (e.kind == EntryKind::numbers)
            for (const Polynomial& v : values) CHECK(v.is_constant());
    }
}

TEST_CASE("parameterized entries across their ranges") {
    for (long m = 1; m <= 4; ++m) {
        CHECK(catalog_eval("fibonacci_order_m", {{"m", Rational(m)}}, 0, 12).size() == 13);
        CHECK(catalog_eval("words_no_factor", {{"m", Rational(m)}}, 0, 12).size() == 13);
    }
    for (long m = 1; m <= 3; ++m)
        CHECK(catalog_eval("padovan_m", {{"m", Rational(m)}}, 0, 12).size() == 13);
    for (long j : {3, 4, 5, 8})
        CHECK(catalog_eval("jgonal", {{"j", Rational(j)}}, 0, 12).size() == 13);
    for (long j : {3, 4, 6})
        CHECK(catalog_eval("centered_pyramidal", {{"j", Rational(j)}}, 0, 12).size() == 13);
    const Rational gegenbauer_orders[] = {Rational(1), Rational(1, 2), Rational(5, 3),
                                          Rational(-1, 2)};
    for (const Rational& beta : gegenbauer_orders)
        CHECK(catalog_eval("gegenbauer", {{"beta", beta}}, 0, 12).size() == 13);
    const std::pair<long, Rational> humbert_cases[] = {
        {2, Rational(1, 2)}, {3, Rational(-1, 2)}, {3, Rational(5, 3)}, {4, Rational(2)}};
    for (const auto& c : humbert_cases)
        CHECK(catalog_eval("humbert", {{"m", Rational(c.first)}, {"beta", c.second}}, 0, 12)
                  .size() == 13);
    for (const Rational& lambda : {Rational(2), Rational(1, 2), Rational(-1), Rational(-3, 4)})
        CHECK(catalog_eval("simsek", {{"lambda", lambda}}, 0, 12).size() == 13);
}

TEST_CASE("terminating hypergeometric evaluation") {
    CHECK(gegenbauer_2f1_crosscheck(Rational(1), Rational(1), 3) == Rational(4));
    CHECK(gegenbauer_2f1_crosscheck(Rational(1), Rational(5, 7), 0) == Rational(1));
    CHECK(gegenbauer_2f1_crosscheck(Rational(-1, 2), Rational(2), 0) == Rational(1));
    CHECK(gegenbauer_2f1_crosscheck(Rational(1, 2), Rational(0), 2) == Rational(-1, 2));
    CHECK_THROWS_AS(gegenbauer_2f1_crosscheck(Rational(-1, 2), Rational(1), 1), Error);
    CHECK_THROWS_AS(gegenbauer_2f1_crosscheck(Rational(-3, 2), Rational(1, 3), 2), Error);
}

TEST_CASE("parameter validation") {
    expect_invalid("humbert", {{"m", Rational(3)}});            // beta missing
    expect_invalid("humbert", {{"m", Rational(3, 2)}, {"beta", Rational(1)}}); // non-integral m
    expect_invalid("humbert", {{"m", Rational(1)}, {"beta", Rational(1)}});    // below min 2
    expect_invalid("jgonal", {{"j", Rational(2)}});             // below min 3
    expect_invalid("pell", {{"bogus", Rational(1)}});           // unknown name
    expect_invalid("simsek", {{"lambda", Rational(1)}});        // pole of the family
    expect_invalid("words_no_factor", {{"m", Rational(0)}});    // below min 1

    bool threw = false;
    try {
        catalog_eval("pell", {}, 5, 2); // empty window
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == errc::invalid_parameter);
    }
    CHECK(threw);
}

TEST_CASE("defaults fill in for omitted parameters") {
    const CatalogEntry& entry = catalog_lookup("fibonacci_order_m");
    ParamMap resolved = catalog_resolve_params(entry, {});
    REQUIRE(resolved.count("m") == 1);
    CHECK(resolved.at("m") == Rational(2));
    // defaulted run equals the explicit run
    CHECK(catalog_eval("fibonacci_order_m", {}, 0, 8) ==
          catalog_eval("fibonacci_order_m", {{"m", Rational(2)}}, 0, 8));
}
