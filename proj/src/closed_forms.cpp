#include "ogf/closed_forms.hpp"

#include "ogf/errors.hpp"

namespace ogf {

Int binomial(long n, long k) {
    if (n < 0 || k < 0)
        fail(errc::degenerate_input, "binomial: negative argument (n=" + std::to_string(n) +
                                         ", k=" + std::to_string(k) + ")");
    if (k > n) return Int(0);
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Rational pochhammer(const Rational& beta, unsigned n) {
    Rational result(1);
    Rational factor = beta;
    for (unsigned i = 0; i < n; ++i) {
        result *= factor;
        factor += Rational(1);
    }
    return result;
}

Rational generalized_binomial(const Rational& beta, unsigned k) {
    Rational numerator(1);
    Rational factor = beta;
    for (unsigned i = 0; i < k; ++i) {
        numerator *= factor;
        factor -= Rational(1);
    }
    Int k_factorial;
    mpz_fac_ui(k_factorial.get_mpz_t(), k);
    return numerator / Rational(k_factorial);
}

NestedSumIndex::NestedSumIndex(unsigned m, unsigned n) : m_(m), n_(n) {
    if (m == 0) fail(errc::degenerate_input, "NestedSumIndex: need at least one level");
    idx_.assign(m >= 2 ? m - 1 : 0, 0);
}

unsigned NestedSumIndex::level(unsigned j) const {
    if (j < 2 || j > m_) fail(errc::degenerate_input, "NestedSumIndex: level out of range");
    return idx_[j - 2];
}

void NestedSumIndex::advance() {
    if (done_) return;
    // Mixed-radix odometer: level 2 is the least significant digit.  Level j
    // may be incremented when the weight of levels >= j, after zeroing the
    // levels below, still fits the budget n.
    unsigned weight_above = weight_;
    for (unsigned j = 2; j <= m_; ++j) {
        weight_above -= j * idx_[j - 2]; // weight of levels > j ... after loop body below
        unsigned candidate = weight_above + j * (idx_[j - 2] + 1);
        if (candidate <= n_) {
            idx_[j - 2] += 1;
            for (unsigned i = 2; i < j; ++i) idx_[i - 2] = 0;
            weight_ = candidate;
            return;
        }
    }
    done_ = true;
}

Polynomial explicit_Y_m2(const Polynomial& P1, const Polynomial& P2, unsigned n) {
    Polynomial sum;
    for (unsigned n2 = 0; n2 <= n / 2; ++n2) {
        Polynomial term = P1.pow(n - 2 * n2) * P2.pow(n2);
        Rational coeff(binomial(static_cast<long>(n - n2), static_cast<long>(n2)));
        if ((n - n2) % 2 == 1) coeff = -coeff;
        sum += term * coeff;
    }
    return sum;
}

Polynomial explicit_Y_m3(const Polynomial& P1, const Polynomial& P2, const Polynomial& P3,
                         unsigned n) {
    Polynomial sum;
    for (unsigned v2 = 0; v2 <= n; ++v2) {
        for (unsigned v3 = 0; v3 <= v2 / 2; ++v3) {
            // The exponent of P1 is n - 2*v2 + v3; indices outside the
            // family's support would make it negative and are skipped.
            long e1 = static_cast<long>(n) - 2 * static_cast<long>(v2) + static_cast<long>(v3);
            if (e1 < 0) continue;
            Rational coeff(binomial(static_cast<long>(n - v2 - v3), static_cast<long>(v2 - 2 * v3)) *
                           binomial(static_cast<long>(n - v2), static_cast<long>(v3)));
            if ((n - v2) % 2 == 1) coeff = -coeff;
            sum += P1.pow(static_cast<unsigned>(e1)) * P2.pow(v2 - 2 * v3) * P3.pow(v3) * coeff;
        }
    }
    return sum;
}

Polynomial explicit_Y_general(const std::vector<Polynomial>& P, unsigned n) {
    if (P.empty()) fail(errc::degenerate_input, "explicit_Y_general: empty coefficient list");
    const unsigned m = static_cast<unsigned>(P.size());
    Polynomial sum;
    for (NestedSumIndex it(m, n); !it.done(); it.advance()) {
        unsigned n1 = it.n1();
        unsigned total = n1;
        Rational coeff(1);
        Polynomial term = P[0].pow(n1);
        unsigned prefix = n1;
        for (unsigned d = 2; d <= m; ++d) {
            unsigned nd = it.level(d);
            prefix += nd;
            total += nd;
            coeff *= Rational(binomial(static_cast<long>(prefix), static_cast<long>(nd)));
            if (nd > 0) term = term * P[d - 1].pow(nd);
        }
        if (total % 2 == 1) coeff = -coeff;
        sum += term * coeff;
    }
    return sum;
}

Polynomial binomial_series_coefficient(const std::vector<Polynomial>& P, const Rational& beta,
                                       unsigned n) {
    if (P.empty()) fail(errc::degenerate_input, "binomial_series_coefficient: empty coefficient list");
    const unsigned m = static_cast<unsigned>(P.size());
    Polynomial sum;
    for (NestedSumIndex it(m, n); !it.done(); it.advance()) {
        unsigned n1 = it.n1();
        unsigned total = n1;
        // Multinomial s!/(n_1!...n_m!) built as a product of binomials over
        // prefix sums.
        Rational coeff(1);
        Polynomial term = P[0].pow(n1);
        unsigned prefix = n1;
        for (unsigned d = 2; d <= m; ++d) {
            unsigned nd = it.level(d);
            prefix += nd;
            total += nd;
            coeff *= Rational(binomial(static_cast<long>(prefix), static_cast<long>(nd)));
            if (nd > 0) term = term * P[d - 1].pow(nd);
        }
        coeff *= generalized_binomial(beta, total);
        sum += term * coeff;
    }
    return sum;
}

Polynomial convolution_S_from_Y(const std::vector<Polynomial>& Y, const std::vector<Polynomial>& Q,
                                unsigned n) {
    if (Y.size() < n + 1)
        fail(errc::truncation_exceeded,
             "convolution: reciprocal-family coefficients available only up to index " +
                 std::to_string(Y.empty() ? 0 : Y.size() - 1) + ", need " + std::to_string(n));
    Polynomial sum;
    for (unsigned l = 0; l < Q.size() && l <= n; ++l) sum += Q[l] * Y[n - l];
    return sum;
}

Polynomial convolution_S_higher(const std::vector<Polynomial>& Y_beta,
                                const std::vector<Polynomial>& Q, unsigned n) {
    return convolution_S_from_Y(Y_beta, Q, n);
}

Polynomial recurrence_Y_next(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Ysq,
                             unsigned n) {
    if (P.empty()) fail(errc::degenerate_input, "recurrence_Y_next: empty coefficient list");
    if (Ysq.size() < n + 1)
        fail(errc::truncation_exceeded,
             "recurrence_Y_next: order-2 sequence too short for index " + std::to_string(n + 1));
    const unsigned m = static_cast<unsigned>(P.size());
    Polynomial sum;
    for (unsigned j = 1; j <= m && j <= n + 1; ++j) {
        sum += P[j - 1] * Ysq[n - j + 1] * Rational(static_cast<long>(j));
    }
    return sum * Rational(-1, static_cast<long>(n) + 1);
}

Polynomial recurrence_S_next(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Q,
                             const std::vector<Polynomial>& Y, unsigned n) {
    if (P.empty()) fail(errc::degenerate_input, "recurrence_S_next: empty coefficient list");
    if (Y.size() < n + 2)
        fail(errc::truncation_exceeded,
             "recurrence_S_next: reciprocal-family sequence too short for index " +
                 std::to_string(n + 1));
    Polynomial sum;
    for (unsigned l = 1; l < Q.size() && l <= n + 1; ++l) {
        sum += Q[l] * Y[n + 1 - l] * Rational(static_cast<long>(l));
    }
    for (unsigned l = 0; l < Q.size() && l <= n + 1; ++l) {
        sum += Q[l] * Y[n + 1 - l] * Rational(static_cast<long>(n) + 1 - static_cast<long>(l));
    }
    return sum * Rational(1, static_cast<long>(n) + 1);
}

Polynomial explicit_twovar_G(unsigned k, unsigned m, unsigned n, unsigned j) {
    if (m + n == 0)
        fail(errc::degenerate_input, "explicit_twovar_G: m + n must be positive");
    const unsigned step = m + n;
    Polynomial sum;
    const Polynomial x1 = Polynomial::variable(1);
    const Polynomial x2 = Polynomial::variable(2);
    for (unsigned c = 0; c * step <= j; ++c) {
        Rational coeff(binomial(static_cast<long>(j) - static_cast<long>(c) * (static_cast<long>(step) - 1),
                                static_cast<long>(c)));
        sum += x2.pow(m * c) * x1.pow(k * (j - c * step)) * coeff;
    }
    return sum;
}

} // namespace ogf
