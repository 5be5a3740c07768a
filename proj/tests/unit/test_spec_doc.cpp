#include "doctest.h"

#include "ogf/spec_doc.hpp"

using namespace ogf;

namespace {
void expect_parse_error(const std::string& text) {
    bool threw = false;
    try {
        parse_spec_document(text);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == errc::parse_error);
    }
    CHECK(threw);
}
} // namespace

TEST_CASE("minimal document fills in every default") {
    SpecDocument doc = parse_spec_document(R"({"P": ["-1", "-1"]})");
    REQUIRE(doc.spec.P.size() == 2);
    CHECK(doc.spec.P[0] == Polynomial(-1));
    CHECK(doc.spec.P[1] == Polynomial(-1));
    CHECK(doc.spec.Q.empty());
    CHECK(doc.spec.alpha == 1);
    CHECK(doc.spec.beta == Rational(1));
    CHECK(doc.spec.truncation == 16);
    CHECK(doc.eval.empty());

    // the parsed family expands to the shifted Fibonacci numbers
    std::vector<Polynomial> y = expand_Y(doc.spec).coefficients();
    const long fib[] = {1, 1, 2, 3, 5, 8};
    for (unsigned n = 0; n <= 5; ++n) CHECK(y[n] == Polynomial(fib[n]));
}

TEST_CASE("full document round-trips through the canonical form") {
    const std::string text = R"({
        "P": ["-x1", "-x2^2 + 1/2"],
        "Q": ["1", "3*x1"],
        "alpha": 2,
        "beta": "5/3",
        "N": 9,
        "eval": {"x1": "1/4", "x2": -2}
    })";
    SpecDocument doc = parse_spec_document(text);
    CHECK(doc.spec.alpha == 2);
    CHECK(doc.spec.beta == Rational(5, 3));
    CHECK(doc.spec.truncation == 9);
    REQUIRE(doc.eval.size() == 2);
    CHECK(doc.eval.at(1) == Rational(1, 4));
    CHECK(doc.eval.at(2) == Rational(-2));

    std::string canonical = serialize_spec_document(doc);
    // serialization is a fixed point: parse -> serialize is idempotent
    CHECK(serialize_spec_document(parse_spec_document(canonical)) == canonical);
    // all six keys present in canonical order
    CHECK(canonical.find("\"P\"") != std::string::npos);
    CHECK(canonical.find("\"Q\"") != std::string::npos);
    CHECK(canonical.find("\"alpha\"") != std::string::npos);
    CHECK(canonical.find("\"beta\"") != std::string::npos);
    CHECK(canonical.find("\"N\"") != std::string::npos);
    CHECK(canonical.find("\"eval\"") != std::string::npos);
    CHECK(canonical.find("\"P\"") < canonical.find("\"Q\""));
    CHECK(canonical.find("\"Q\"") < canonical.find("\"alpha\""));
    CHECK(canonical.find("\"alpha\"") < canonical.find("\"beta\""));
    CHECK(canonical.find("\"beta\"") < canonical.find("\"N\""));
    CHECK(canonical.find("\"N\"") < canonical.find("\"eval\""));
}

TEST_CASE("defaults serialize explicitly") {
    SpecDocument doc = parse_spec_document(R"({"P": ["-1"]})");
    std::string canonical = serialize_spec_document(doc);
    CHECK(canonical.find("\"alpha\"") != std::string::npos);
    CHECK(canonical.find("\"beta\"") != std::string::npos);
    CHECK(canonical.find("\"N\"") != std::string::npos);
    CHECK(serialize_spec_document(parse_spec_document(canonical)) == canonical);
}

TEST_CASE("beta accepts integers and rational strings") {
    CHECK(parse_spec_document(R"({"P": ["-1"], "beta": 3})").spec.beta == Rational(3));
    CHECK(parse_spec_document(R"({"P": ["-1"], "beta": "-1/2"})").spec.beta == Rational(-1, 2));
    CHECK(parse_spec_document(R"({"P": ["-1"], "beta": "4"})").spec.beta == Rational(4));
}

TEST_CASE("malformed input is rejected with parse_error") {
    expect_parse_error(R"({"P": ["-1")");                    // truncated JSON
    expect_parse_error(R"([1, 2, 3])");                      // not an object
    expect_parse_error(R"({})");                             // P missing
    expect_parse_error(R"({"P": []})");                      // P empty
    expect_parse_error(R"({"P": ["-1"], "extra": 1})");      // unknown key
    expect_parse_error(R"({"P": ["2x1"]})");                 // bad polynomial text
    expect_parse_error(R"({"P": [5]})");                     // non-string entry
    expect_parse_error(R"({"P": ["-1"], "N": -3})");         // negative truncation
    expect_parse_error(R"({"P": ["-1"], "N": "12"})");       // stringly-typed N
    expect_parse_error(R"({"P": ["-1"], "alpha": -1})");     // negative alpha
    expect_parse_error(R"({"P": ["-1"], "beta": 0.5})");     // JSON float beta
    expect_parse_error(R"({"P": ["-1"], "beta": "1/0"})");   // zero denominator
    expect_parse_error(R"({"P": ["-1"], "eval": {"x10": 1}})"); // variable out of range
    expect_parse_error(R"({"P": ["-1"], "eval": {"y1": 1}})");  // not an x-variable
    expect_parse_error(R"({"P": ["-1"], "eval": {"x1": 0.25}})"); // float eval value

    try {
        parse_spec_document(R"({"P": ["-1")");
    } catch (const Error& e) {
        // malformed JSON reports where the reader stopped
        std::string what = e.what();
        CHECK(what.find("byte") != std::string::npos);
    }
}
