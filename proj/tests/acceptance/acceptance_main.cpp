// Acceptance gate for the generating-function toolkit.  Each criterion
// prints exactly one status line; supporting measurements are indented
// beneath it.  The process exits 0 when every criterion holds, with one
// deliberate exception: criterion 7 restates two printed source identities
// that are false as printed (each misses a sqrt(5) factor).  That criterion
// is computed honestly and reported as FAIL; the exit code stays 0 only
// when its measured discrepancy matches the documented erratum and the
// corrected identities pass at the pinned tolerance.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ogf/binet.hpp"
#include "ogf/catalog.hpp"
#include "ogf/closed_forms.hpp"
#include "ogf/series.hpp"
#include "ogf/transforms.hpp"
#include "ogf/verify.hpp"

using namespace ogf;

namespace {

// Pinned numeric tolerances and the documented discrepancy windows for the
// two false-as-printed reciprocal-sum identities.
constexpr double kIdentityTol = 1e-9;
constexpr double kFirstGapLo = 0.84, kFirstGapHi = 0.86;   // measured ~0.8487
constexpr double kSecondGapLo = 1.22, kSecondGapHi = 1.24; // measured ~1.2283

std::vector<std::string> g_details;

void detail(const std::string& line) { g_details.push_back("    " + line); }

void report(int number, bool pass, const std::string& note) {
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << note
              << "\n";
    for (const std::string& line : g_details) std::cout << line << "\n";
    g_details.clear();
}

Polynomial X1() { return Polynomial::variable(1); }

Polynomial random_polynomial(std::mt19937& rng, unsigned vars, unsigned max_degree, long bound) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> terms(1, 3);
    Polynomial p;
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m;
        for (unsigned v = 0; v < vars; ++v) m.exponents.push_back(deg(rng));
        m.trim();
        p.add_term(std::move(m), Rational(coeff(rng)));
    }
    return p;
}

std::vector<Polynomial> expand_rows(const std::vector<Polynomial>& P, int order) {
    FamilySpec spec;
    spec.P = P;
    spec.truncation = order;
    return expand_Y(spec).coefficients();
}

// --- criterion 1: explicit nested-sum formulas against the division oracle

bool criterion_explicit_sums() {
    std::mt19937 rng(880101);
    std::uniform_int_distribution<int> pick_m(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned m = static_cast<unsigned>(pick_m(rng));
        std::vector<Polynomial> P;
        for (unsigned j = 0; j < m; ++j) P.push_back(random_polynomial(rng, 2, 3, 5));
        std::vector<Polynomial> y = expand_rows(P, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            if (explicit_Y_general(P, n) != y[n]) {
                detail("general nested sum diverges at trial " + std::to_string(trial) +
                       ", n = " + std::to_string(n));
                return false;
            }
            if (m == 2 && explicit_Y_m2(P[0], P[1], n) != y[n]) {
                detail("single-sum specialization diverges at n = " + std::to_string(n));
                return false;
            }
            if (m == 3 && explicit_Y_m3(P[0], P[1], P[2], n) != y[n]) {
                detail("double-sum specialization diverges at n = " + std::to_string(n));
                return false;
            }
        }
    }
    return true;
}

// --- criterion 2: surd closed forms for the two-term family

bool named_sequence(const char* label, const Rational& p1, const Rational& p2, const Rational& q0,
                    const Rational& q1, unsigned first_n, const std::vector<long>& want) {
    for (unsigned i = 0; i < want.size(); ++i) {
        SurdElement v = binet_S2(p1, p2, q0, q1, first_n + i);
        if (!v.is_rational() || v.rational_part() != Rational(want[i])) {
            detail(std::string(label) + " mismatch at n = " + std::to_string(first_n + i) +
                   ": got " + v.to_string());
            return false;
        }
    }
    return true;
}

bool criterion_closed_forms() {
    std::mt19937 rng(880202);
    std::uniform_int_distribution<long> coeff(-8, 8);
    int accepted = 0;
    while (accepted < 100) {
        long p1 = coeff(rng), p2 = coeff(rng), q0 = coeff(rng), q1 = coeff(rng);
        if (p2 == 0) continue;
        long disc = p1 * p1 - 4 * p2;
        if (disc <= 0) continue;
        long root = static_cast<long>(std::lround(std::sqrt(static_cast<double>(disc))));
        bool square = false;
        for (long r = std::max(0L, root - 2); r <= root + 2; ++r)
            if (r * r == disc) square = true;
        if (square) continue;
        ++accepted;

        FamilySpec spec;
        spec.P = {Polynomial(p1), Polynomial(p2)};
        spec.Q = {Polynomial(q0), Polynomial(q1)};
        spec.truncation = 12;
        std::vector<Polynomial> y = expand_rows(spec.P, 12);
        std::vector<Polynomial> s = expand_S(spec).coefficients();
        for (unsigned n = 0; n <= 12; ++n) {
            SurdElement yv = binet_Y2(Rational(p1), Rational(p2), n);
            SurdElement sv = binet_S2(Rational(p1), Rational(p2), Rational(q0), Rational(q1), n);
            if (!yv.surd_part().is_zero() || !sv.surd_part().is_zero()) {
                detail("surd part failed to cancel for (p1, p2) = (" + std::to_string(p1) + ", " +
                       std::to_string(p2) + ")");
                return false;
            }
            if (yv.rational_part() != y[n].constant_value() ||
                sv.rational_part() != s[n].constant_value()) {
                detail("closed form disagrees with the oracle at n = " + std::to_string(n));
                return false;
            }
        }
    }

    if (!named_sequence("Fibonacci", Rational(-1), Rational(-1), Rational(0), Rational(1), 1,
                        {1, 1, 2, 3, 5, 8, 13}))
        return false;
    if (!named_sequence("Lucas", Rational(-1), Rational(-1), Rational(2), Rational(-1), 0,
                        {2, 1, 3, 4, 7, 11}))
        return false;
    if (!named_sequence("Pell", Rational(-2), Rational(-1), Rational(0), Rational(1), 0,
                        {0, 1, 2, 5, 12, 29}))
        return false;
    const long garland[] = {1, 3, 7, 17, 41};
    for (unsigned m = 0; m <= 4; ++m) {
        if (closed_form_gm(m) != Rational(garland[m])) {
            detail("garland rank sequence mismatch at m = " + std::to_string(m));
            return false;
        }
    }
    return true;
}

// --- criterion 3: derivative recurrences and the order-m doubling identity

bool criterion_recurrences() {
    std::mt19937 rng(880303);
    std::uniform_int_distribution<int> pick_m(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> P, Q;
        int m = pick_m(rng);
        for (int j = 0; j < m; ++j) P.push_back(random_polynomial(rng, 2, 2, 4));
        for (int l = 0; l < 1 + trial % 3; ++l) Q.push_back(random_polynomial(rng, 2, 2, 4));
        FamilySpec spec;
        spec.P = P;
        spec.Q = Q;
        spec.truncation = 12;
        std::vector<Polynomial> y = expand_rows(P, 12);
        std::vector<Polynomial> s = expand_S(spec).coefficients();
        FamilySpec squared = spec;
        squared.Q.clear();
        squared.beta = Rational(2);
        std::vector<Polynomial> ysq = expand_Y_higher(squared).coefficients();
        for (unsigned n = 0; n + 1 <= 12; ++n) {
            if (recurrence_Y_next(P, ysq, n) != y[n + 1]) {
                detail("reciprocal-family recurrence diverges at n = " + std::to_string(n + 1));
                return false;
            }
            if (recurrence_S_next(P, Q, y, n) != s[n + 1]) {
                detail("rational-family recurrence diverges at n = " + std::to_string(n + 1));
                return false;
            }
        }
    }

    for (unsigned m = 2; m <= 5; ++m) {
        std::vector<Polynomial> f = expand_rows(std::vector<Polynomial>(m, Polynomial(-1)), 20);
        for (unsigned n = m + 1; n <= 20; ++n) {
            if (f[n] != Rational(2) * f[n - 1] - f[n - m - 1]) {
                detail("order-" + std::to_string(m) + " doubling identity fails at n = " +
                       std::to_string(n));
                return false;
            }
        }
    }
    return true;
}

// --- criterion 4: the binomial sequence transform

bool criterion_transform() {
    std::mt19937 rng(880404);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    const Polynomial thetas[] = {Polynomial(Rational(5, 2)), X1() - Polynomial(2),
                                 Polynomial(Rational(-1, 3)) * X1() * X1()};
    for (const Polynomial& theta : thetas) {
        std::vector<Polynomial> u;
        for (int j = 0; j < 16; ++j)
            u.push_back(Polynomial(Rational(coeff(rng), den(rng))) + Rational(coeff(rng)) * X1());
        if (euler_inverse(euler_transform(u, theta), theta) != u ||
            euler_transform(euler_inverse(u, theta), theta) != u) {
            detail("transform round trip failed for theta = " + theta.to_string());
            return false;
        }
    }

    // (1 + x w)/(1 - (1+x) w - x w^2) --x--> 1/(1 - (1+3x) w + 2x^2 w^2)
    FamilySpec source;
    source.P = {Polynomial(-1) - X1(), -X1()};
    source.Q = {Polynomial(1), X1()};
    source.truncation = 16;
    FamilySpec target;
    target.P = {Polynomial(-1) - Rational(3) * X1(), Rational(2) * X1() * X1()};
    target.truncation = 16;
    std::vector<Polynomial> s = expand_S(source).coefficients();
    std::vector<Polynomial> y = expand_Y(target).coefficients();
    if (euler_transform(s, X1()) != y) {
        detail("x-parameter transform of the antichain family missed its target");
        return false;
    }
    if (euler_inverse(y, X1()) != s) {
        detail("inverse transform failed to recover the antichain family");
        return false;
    }
    return true;
}

// --- criterion 5: rational-exponent series laws

bool criterion_exponent_laws() {
    std::mt19937 rng(880505);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> rows = {Polynomial(1)};
        for (int j = 1; j < 10; ++j)
            rows.push_back(Polynomial(Rational(coeff(rng))) + Rational(coeff(rng)) * X1());
        TruncatedSeries base(rows);
        Rational b1(num(rng), den(rng));
        Rational b2(num(rng), den(rng));
        TruncatedSeries lhs = series_mul(series_pow_rational(base, b1),
                                         series_pow_rational(base, b2));
        if (lhs != series_pow_rational(base, b1 + b2)) {
            detail("exponent addition failed for " + b1.to_string() + " + " + b2.to_string());
            return false;
        }
    }

    const Rational orders[] = {Rational(1),     Rational(2),      Rational(3),
                               Rational(1, 2),  Rational(-1, 2),  Rational(5, 3)};
    for (const Rational& beta : orders) {
        FamilySpec spec;
        spec.P = {Polynomial(-1)}; // (1 - w)^(-beta)
        spec.beta = beta;
        spec.truncation = 12;
        std::vector<Polynomial> rows = expand_Y_higher(spec).coefficients();
        Int n_factorial(1);
        for (unsigned n = 0; n <= 12; ++n) {
            if (n > 0) n_factorial *= n;
            if (rows[n] != Polynomial(pochhammer(beta, n) / Rational(n_factorial))) {
                detail("rising-factorial row failed for order " + beta.to_string() + " at n = " +
                       std::to_string(n));
                return false;
            }
        }
    }
    return true;
}

// --- criterion 6: catalog regressions

bool criterion_catalog() {
    std::vector<Polynomial> cheb = catalog_eval("chebyshev_U", {}, 0, 10);
    for (unsigned n = 0; n <= 10; ++n) {
        if (cheb[n].eval({{1, Rational(1)}}) != Rational(static_cast<long>(n) + 1)) {
            detail("second-kind Chebyshev value at 1 wrong for n = " + std::to_string(n));
            return false;
        }
    }

    Polynomial legendre2 = catalog_eval("legendre", {}, 2, 2)[0];
    if (legendre2 != Rational(3, 2) * X1() * X1() - Polynomial(Rational(1, 2))) {
        detail("quadratic Legendre polynomial is " + legendre2.to_string());
        return false;
    }

    std::vector<Polynomial> tri = catalog_eval("jgonal", {{"j", Rational(3)}}, 1, 4);
    const long want_tri[] = {1, 3, 6, 10};
    for (unsigned i = 0; i < 4; ++i) {
        if (tri[i] != Polynomial(want_tri[i])) {
            detail("triangular numbers wrong at index " + std::to_string(i + 1));
            return false;
        }
    }

    std::vector<Polynomial> words = catalog_eval("words_no_factor", {{"m", Rational(2)}}, 0, 4);
    const long want_words[] = {1, 2, 3, 5, 8};
    for (unsigned n = 0; n <= 4; ++n) {
        if (words[n] != Polynomial(want_words[n])) {
            detail("square-free binary word counts wrong at n = " + std::to_string(n));
            return false;
        }
    }

    std::vector<Polynomial> rows = catalog_eval("binomial_row", {}, 0, 10);
    Rational power(1);
    for (unsigned n = 0; n <= 10; ++n) {
        if (rows[n].eval({{1, Rational(1)}}) != power) {
            detail("binomial row sum wrong at n = " + std::to_string(n));
            return false;
        }
        power *= Rational(2);
    }

    const Rational betas[] = {Rational(1), Rational(1, 2), Rational(5, 3)};
    const Rational points[] = {Rational(0), Rational(1), Rational(1, 2), Rational(-1, 3),
                               Rational(2)};
    for (const Rational& beta : betas) {
        std::vector<Polynomial> g = catalog_eval("gegenbauer", {{"beta", beta}}, 0, 8);
        for (unsigned n = 0; n <= 8; ++n) {
            for (const Rational& x : points) {
                if (g[n].eval({{1, x}}) != gegenbauer_2f1_crosscheck(beta, x, n)) {
                    detail("hypergeometric evaluation mismatch at order " + beta.to_string() +
                           ", x = " + x.to_string() + ", n = " + std::to_string(n));
                    return false;
                }
            }
        }
    }
    return true;
}

// --- criterion 7: the two printed reciprocal-sum identities (honest check)

struct ReciprocalOutcome {
    bool printed_hold = false;  ///< the identities as printed (they do not)
    bool defect_documented = false; ///< gaps inside the pinned windows + corrected forms pass
};

ReciprocalOutcome criterion_reciprocal_sums() {
    ReciprocalOutcome out;

    double fib_sum = 0.0; // sum_{j=1..60} 1/F_(2j)
    for (unsigned j = 1; j <= 60; ++j)
        fib_sum += Rational(Int(1), fibonacci_number(2 * j)).to_double();

    const double sqrt5 = std::sqrt(5.0);
    const double mu2 = (3.0 - sqrt5) / 2.0;
    const double mu4 = (7.0 - 3.0 * sqrt5) / 2.0;
    const double lambert_gap =
        lambert_partial(mu2, 1e-13).value - lambert_partial(mu4, 1e-13).value;

    double weighted_sum = 0.0; // sum_{j=1..60} L_(2j)/F_(4j)
    for (unsigned j = 1; j <= 60; ++j)
        weighted_sum += Rational(lucas_number(2 * j), fibonacci_number(4 * j)).to_double();

    const double first_diff = std::abs(fib_sum - lambert_gap);
    const double second_diff = std::abs(weighted_sum - lambert_gap / sqrt5);
    const bool first_printed = first_diff < kIdentityTol;
    const bool second_printed = second_diff < kIdentityTol;
    out.printed_hold = first_printed && second_printed;

    const double first_corrected = std::abs(fib_sum - sqrt5 * lambert_gap);
    const double second_corrected = std::abs(weighted_sum - fib_sum);

    std::ostringstream line;
    line.precision(12);
    line << "sum 1/F_(2j) = " << fib_sum << ", L(mu^2) - L(mu^4) = " << lambert_gap
         << ", |difference| = " << first_diff;
    detail(line.str());
    line.str("");
    line << "sum L_(2j)/F_(4j) = " << weighted_sum << ", (L(mu^2) - L(mu^4))/sqrt(5) = "
         << lambert_gap / sqrt5 << ", |difference| = " << second_diff;
    detail(line.str());
    line.str("");
    line << "corrected: |sum 1/F_(2j) - sqrt(5)*(L(mu^2) - L(mu^4))| = " << first_corrected
         << (first_corrected < kIdentityTol ? "  (passes" : "  (fails") << " at 1e-9)";
    detail(line.str());
    line.str("");
    line << "corrected: |sum L_(2j)/F_(4j) - sum 1/F_(2j)| = " << second_corrected
         << (second_corrected < kIdentityTol ? "  (passes" : "  (fails") << " at 1e-9)";
    detail(line.str());

    out.defect_documented = !first_printed && !second_printed &&
                            first_diff > kFirstGapLo && first_diff < kFirstGapHi &&
                            second_diff > kSecondGapLo && second_diff < kSecondGapHi &&
                            first_corrected < kIdentityTol && second_corrected < kIdentityTol;
    return out;
}

// --- criterion 8: full verification run against the golden flag list

bool criterion_verification(const std::string& golden_path) {
    std::ifstream in(golden_path);
    if (!in.good()) {
        detail("cannot open golden flag list at " + golden_path);
        return false;
    }
    std::vector<std::string> golden;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) golden.push_back(line);
    std::sort(golden.begin(), golden.end());

    std::vector<VerifyResult> results = run_verify_suite("all", 10);
    std::vector<std::string> flagged;
    unsigned failed = 0;
    for (const VerifyResult& r : results) {
        if (r.status == VerifyStatus::flagged) flagged.push_back(r.id);
        if (r.status == VerifyStatus::fail) {
            ++failed;
            detail("unexpected failure: " + r.id + " - " + r.detail);
        }
    }
    std::sort(flagged.begin(), flagged.end());
    if (failed != 0) return false;
    if (flagged != golden) {
        detail("flagged set diverges from the golden list:");
        for (const std::string& id : flagged) detail("  measured: " + id);
        for (const std::string& id : golden) detail("  golden:   " + id);
        return false;
    }
    detail(std::to_string(results.size()) + " checks, 0 failed, " +
           std::to_string(flagged.size()) + " flagged (matching the golden list)");
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: ogf_acceptance <golden-flag-list>\n";
        return 2;
    }

    bool c1 = criterion_explicit_sums();
    report(1, c1, "explicit nested sums == division oracle on 200 random families (n <= 12)");

    bool c2 = criterion_closed_forms();
    report(2, c2, "surd closed forms match the oracle on 100 random two-term families "
                  "plus the named integer sequences");

    bool c3 = criterion_recurrences();
    report(3, c3, "derivative recurrences advance 100 random families; order-m doubling "
                  "identity holds to n = 20");

    bool c4 = criterion_transform();
    report(4, c4, "sequence transform round-trips and maps the antichain family onto its "
                  "shifted relative (N = 16, exact)");

    bool c5 = criterion_exponent_laws();
    report(5, c5, "rational-exponent addition law and the rising-factorial constant family");

    bool c6 = criterion_catalog();
    report(6, c6, "catalog regressions and the terminating-hypergeometric grid agree exactly");

    ReciprocalOutcome c7 = criterion_reciprocal_sums();
    // The two identities are restated here exactly as printed in the source
    // material; measured honestly, both miss by a sqrt(5) factor, so this
    // criterion reports FAIL on purpose.  The run is still acceptable when
    // the measured gaps sit inside the documented windows and the corrected
    // identities pass.
    report(7, c7.printed_hold,
           c7.defect_documented
               ? "printed reciprocal-sum identities are false as stated (sqrt(5) erratum); "
                 "measured gaps match the documented defect and the corrected forms pass"
               : "printed reciprocal-sum identities fail and the discrepancy does NOT match "
                 "the documented defect");

    bool c8 = criterion_verification(argv[1]);
    report(8, c8, "full verification run: zero failures, flagged set equals the golden list");

    const bool accept = c1 && c2 && c3 && c4 && c5 && c6 && c8 && c7.defect_documented;
    std::cout << (accept ? "acceptance: OK" : "acceptance: NOT OK")
              << " (criterion 7 documents a known erratum and is expected to FAIL)\n";
    return accept ? 0 : 1;
}
