#include "ogf/transforms.hpp"

#include <cmath>
#include <cstdlib>

#include "ogf/closed_forms.hpp"
#include "ogf/errors.hpp"
#include "ogf/series.hpp"

namespace ogf {

std::vector<Polynomial> euler_transform(const std::vector<Polynomial>& u, const Polynomial& theta) {
    const std::size_t count = u.size();
    // theta_pows[e] = theta^e, filled incrementally.
    std::vector<Polynomial> theta_pows;
    theta_pows.reserve(count);
    theta_pows.push_back(Polynomial(1));
    for (std::size_t e = 1; e < count; ++e) theta_pows.push_back(theta_pows.back() * theta);

    std::vector<Polynomial> v;
    v.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        Polynomial sum;
        for (std::size_t k = 0; k <= j; ++k) {
            Rational c(binomial(static_cast<long>(j), static_cast<long>(k)));
            sum += theta_pows[j - k] * u[k] * c;
        }
        v.push_back(std::move(sum));
    }
    return v;
}

std::vector<Polynomial> euler_inverse(const std::vector<Polynomial>& u, const Polynomial& theta) {
    return euler_transform(u, -theta);
}

Int fibonacci_number(unsigned n) {
    Int f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return f;
}

Int lucas_number(unsigned n) {
    Int l;
    mpz_lucnum_ui(l.get_mpz_t(), n);
    return l;
}

namespace {

constexpr double kGoldenRatio = 1.6180339887498948482;
constexpr unsigned kMaxTerms = 200000;

void check_tolerance(double tol) {
    if (!(tol > 0.0)) fail(errc::invalid_parameter, "summation tolerance must be positive");
}

} // namespace

NumericSum lambert_partial(double x, double tol) {
    check_tolerance(tol);
    double ax = std::abs(x);
    if (ax >= 1.0)
        fail(errc::divergent_argument,
             "lambert_partial: series diverges for |x| >= 1 (got x = " + std::to_string(x) + ")");
    NumericSum out;
    double one_minus = 1.0 - ax;
    double xj = 1.0; // x^j, updated incrementally
    double axj = 1.0;
    for (unsigned j = 1; j <= kMaxTerms; ++j) {
        xj *= x;
        axj *= ax;
        double t = xj / (1.0 - xj);
        out.value += t;
        out.terms_used = j;
        out.last_term = t;
        // Tail bound: sum_{i>j} |x|^i/(1-|x|^i) <= |x|^(j+1)/(1-|x|)^2.
        if (axj * ax / (one_minus * one_minus) < tol) return out;
    }
    fail(errc::divergent_argument, "lambert_partial: tolerance not reached within " +
                                       std::to_string(kMaxTerms) + " terms");
}

NumericSum reciprocal_fib_partial(unsigned m, double x, double tol) {
    check_tolerance(tol);
    if (m == 0) fail(errc::degenerate_input, "reciprocal_fib_partial: index stride m must be >= 1");
    double radius = std::pow(kGoldenRatio, static_cast<double>(m));
    double ax = std::abs(x);
    if (ax >= radius)
        fail(errc::divergent_argument,
             "reciprocal_fib_partial: |x| must stay below the convergence radius phi^m ~= " +
                 std::to_string(radius));
    // Beyond small j, |term_{j+1}/term_j| -> |x|/phi^m < 1.  Mix in a small
    // safety margin for the pre-asymptotic indices.
    double r = std::min(0.999999, ax / radius * 1.0000001 + 1e-12);
    double tail_factor = (r > 0.0) ? r / (1.0 - r) : 0.0;
    NumericSum out;
    double xj = 1.0;
    for (unsigned j = 1; j <= kMaxTerms; ++j) {
        xj *= x;
        Rational denom(fibonacci_number(m * j));
        double t = xj / denom.to_double();
        out.value += t;
        out.terms_used = j;
        out.last_term = t;
        if (std::abs(t) * tail_factor < tol || (tail_factor == 0.0 && std::abs(t) < tol)) return out;
    }
    fail(errc::divergent_argument, "reciprocal_fib_partial: tolerance not reached within " +
                                       std::to_string(kMaxTerms) + " terms");
}

NumericSum lucas_weighted_fib_partial(double x, double tol) {
    check_tolerance(tol);
    double radius = kGoldenRatio * kGoldenRatio;
    double ax = std::abs(x);
    if (ax >= radius)
        fail(errc::divergent_argument,
             "lucas_weighted_fib_partial: |x| must stay below the convergence radius phi^2 ~= " +
                 std::to_string(radius));
    double r = std::min(0.999999, ax / radius * 1.0000001 + 1e-12);
    double tail_factor = (r > 0.0) ? r / (1.0 - r) : 0.0;
    NumericSum out;
    double xj = 1.0;
    for (unsigned j = 1; j <= kMaxTerms; ++j) {
        xj *= x;
        // L_(2j) / F_(4j) = 1 / F_(2j) exactly, but the sum is defined and
        // evaluated with the weights as written.
        Rational weight(lucas_number(2 * j));
        Rational denom(fibonacci_number(4 * j));
        double t = xj * (weight / denom).to_double();
        out.value += t;
        out.terms_used = j;
        out.last_term = t;
        if (std::abs(t) * tail_factor < tol || (tail_factor == 0.0 && std::abs(t) < tol)) return out;
    }
    fail(errc::divergent_argument, "lucas_weighted_fib_partial: tolerance not reached within " +
                                       std::to_string(kMaxTerms) + " terms");
}

std::vector<RatioCheck> verify_f2j_over_fj(unsigned j_max) {
    FamilySpec spec;
    spec.P = {Polynomial(-1), Polynomial(-1)};
    spec.Q = {Polynomial(1), Polynomial(2)};
    spec.truncation = static_cast<int>(j_max);
    TruncatedSeries s = expand_S(spec);

    std::vector<RatioCheck> report;
    report.reserve(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j) {
        RatioCheck rc;
        rc.j = j;
        rc.s_value = s.at(static_cast<int>(j)).is_zero()
                         ? Rational(0)
                         : s.at(static_cast<int>(j)).constant_value();
        Int fj = fibonacci_number(j);
        if (fj != 0) {
            rc.printed_defined = true;
            rc.printed_ratio = Rational(fibonacci_number(2 * j), fj);
            rc.printed_matches = (rc.printed_ratio == rc.s_value);
        }
        rc.offset_ratio = Rational(fibonacci_number(2 * j + 2), fibonacci_number(j + 1));
        rc.offset_matches = (rc.offset_ratio == rc.s_value);
        report.push_back(rc);
    }
    return report;
}

} // namespace ogf
