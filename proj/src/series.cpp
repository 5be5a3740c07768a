#include "ogf/series.hpp"

namespace ogf {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        fail(errc::length_mismatch, "series orders " + std::to_string(a.order()) + " and " +
                                        std::to_string(b.order()) + " differ");
}

} // namespace

void FamilySpec::validate() const {
    if (P.empty()) fail(errc::degenerate_input, "family needs at least one denominator coefficient");
    if (truncation < 0) fail(errc::degenerate_input, "negative truncation order");
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.at(n) = a.at(n) + b.at(n);
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.at(n) = a.at(n) - b.at(n);
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        Polynomial acc;
        for (int i = 0; i <= n; ++i) {
            if (a.at(i).is_zero() || b.at(n - i).is_zero()) continue;
            acc += a.at(i) * b.at(n - i);
        }
        r.at(n) = std::move(acc);
    }
    return r;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    const Polynomial& c0 = a.at(0);
    if (!c0.is_constant() || c0.is_zero())
        fail(errc::non_invertible_series,
             "constant term '" + c0.to_string() + "' is not a nonzero scalar");
    Rational inv = Rational(1) / c0.constant_value();
    TruncatedSeries b(a.order());
    b.at(0) = Polynomial(inv);
    for (int n = 1; n <= a.order(); ++n) {
        Polynomial acc;
        for (int i = 1; i <= n; ++i) {
            if (a.at(i).is_zero()) continue;
            acc += a.at(i) * b.at(n - i);
        }
        b.at(n) = acc * (-inv);
    }
    return b;
}

TruncatedSeries series_pow_rational(const TruncatedSeries& a, const Rational& beta) {
    if (a.at(0) != Polynomial(Rational(1)))
        fail(errc::non_invertible_series,
             "rational power requires constant term 1, got '" + a.at(0).to_string() + "'");
    TruncatedSeries b(a.order());
    b.at(0) = Polynomial(Rational(1));
    // From b = a^beta: a b' = beta a' b, compared coefficientwise.
    for (int n = 0; n + 1 <= a.order(); ++n) {
        Polynomial acc;
        for (int j = 1; j <= n + 1; ++j) {
            if (a.at(j).is_zero()) continue;
            Rational weight = beta * Rational(j) - Rational(n + 1 - j);
            if (weight.is_zero()) continue;
            acc += a.at(j) * b.at(n + 1 - j) * weight;
        }
        acc *= Rational(1, n + 1);
        b.at(n + 1) = std::move(acc);
    }
    return b;
}

TruncatedSeries denominator_series(const FamilySpec& spec) {
    spec.validate();
    TruncatedSeries d(spec.truncation);
    d.at(0) = Polynomial(Rational(1));
    for (std::size_t j = 1; j <= spec.P.size(); ++j) {
        if (static_cast<int>(j) > spec.truncation) break;
        d.at(static_cast<int>(j)) = spec.P[j - 1];
    }
    return d;
}

TruncatedSeries numerator_series(const FamilySpec& spec) {
    spec.validate();
    TruncatedSeries q(spec.truncation);
    if (spec.Q.empty()) {
        q.at(0) = Polynomial(Rational(1));
        return q;
    }
    for (std::size_t l = 0; l < spec.Q.size(); ++l) {
        if (static_cast<int>(l) > spec.truncation) break;
        q.at(static_cast<int>(l)) = spec.Q[l];
    }
    return q;
}

TruncatedSeries expand_Y(const FamilySpec& spec) {
    if (!spec.Q.empty()) fail(errc::degenerate_input, "reciprocal family takes no numerator");
    if (spec.alpha != 1 || spec.beta != Rational(1))
        fail(errc::degenerate_input, "plain reciprocal family requires alpha = beta = 1");
    return series_reciprocal(denominator_series(spec));
}

TruncatedSeries expand_S(const FamilySpec& spec) {
    if (spec.alpha != 1 || spec.beta != Rational(1))
        fail(errc::degenerate_input, "plain rational family requires alpha = beta = 1");
    return series_mul(numerator_series(spec), series_reciprocal(denominator_series(spec)));
}

TruncatedSeries expand_Y_higher(const FamilySpec& spec) {
    if (!spec.Q.empty()) fail(errc::degenerate_input, "reciprocal family takes no numerator");
    if (spec.alpha != 1) fail(errc::degenerate_input, "reciprocal family requires alpha = 1");
    return series_pow_rational(denominator_series(spec), -spec.beta);
}

TruncatedSeries expand_S_higher(const FamilySpec& spec) {
    spec.validate();
    TruncatedSeries denom_part = series_pow_rational(denominator_series(spec), -spec.beta);
    TruncatedSeries num = numerator_series(spec);
    TruncatedSeries acc(spec.truncation);
    acc.at(0) = Polynomial(Rational(1));
    for (unsigned i = 0; i < spec.alpha; ++i) acc = series_mul(acc, num);
    return series_mul(acc, denom_part);
}

TruncatedSeries expand_general_rational(const std::vector<Polynomial>& numer,
                                        const std::vector<Polynomial>& denom, int order) {
    if (denom.empty()) fail(errc::degenerate_input, "empty denominator");
    if (order < 0) fail(errc::degenerate_input, "negative truncation order");
    TruncatedSeries d(order), q(order);
    for (std::size_t i = 0; i < denom.size(); ++i)
        if (static_cast<int>(i) <= order) d.at(static_cast<int>(i)) = denom[i];
    for (std::size_t i = 0; i < numer.size(); ++i)
        if (static_cast<int>(i) <= order) q.at(static_cast<int>(i)) = numer[i];
    return series_mul(q, series_reciprocal(d));
}

} // namespace ogf
