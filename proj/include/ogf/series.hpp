#ifndef OGF_SERIES_HPP
#define OGF_SERIES_HPP

#include <vector>

#include "ogf/polynomial.hpp"

namespace ogf {

/// Formal power series in w truncated at a fixed order N: coefficients
/// c_0..c_N, each a multivariate Polynomial.  All binary operations
/// require equal truncation orders (length_mismatch otherwise).
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    /// Zero series of order N (N+1 coefficients).
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) fail(errc::degenerate_input, "negative truncation order");
    }
    explicit TruncatedSeries(std::vector<Polynomial> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) fail(errc::degenerate_input, "series needs at least a constant term");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of w^n (truncation_exceeded when n > order).
    const Polynomial& at(int n) const {
        if (n < 0 || n > order())
            fail(errc::truncation_exceeded,
                 "coefficient index " + std::to_string(n) + " beyond truncation order " +
                     std::to_string(order()));
        return c_[static_cast<std::size_t>(n)];
    }

    Polynomial& at(int n) {
        return const_cast<Polynomial&>(static_cast<const TruncatedSeries*>(this)->at(n));
    }

    const std::vector<Polynomial>& coefficients() const { return c_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

  private:
    std::vector<Polynomial> c_;
};

/// Description of one generating-function family
///
///   numerator^alpha / denominator^beta
///   numerator   = Q_0 + Q_1 w + ... + Q_k w^k   (empty Q means numerator 1)
///   denominator = 1 + P_1 w + ... + P_m w^m
///
/// with polynomial coefficients P_j, Q_l, a nonnegative integer exponent
/// alpha and a rational exponent beta.  The denominator's constant term is
/// structurally 1, which keeps every expansion exact.
struct FamilySpec {
    std::vector<Polynomial> P;        ///< P_1..P_m, m >= 1
    std::vector<Polynomial> Q;        ///< Q_0..Q_k; empty = numerator 1
    unsigned alpha = 1;               ///< numerator exponent (nonnegative integer)
    Rational beta = Rational(1);      ///< denominator exponent
    int truncation = 16;              ///< N: coefficients 0..N are produced

    void validate() const;            ///< degenerate_input on structural violations
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse.  Requires the constant term to be a nonzero
/// rational constant (a unit of the coefficient ring);
/// non_invertible_series otherwise.  Division recurrence:
///   b_0 = 1/a_0,  b_n = -(1/a_0) * sum_{i=1..n} a_i b_{n-i}.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// a^beta for rational beta, requiring constant term exactly 1.
/// Exact ODE recurrence (b_0 = 1):
///   (n+1) b_{n+1} = sum_{j=1..n+1} (beta*j - (n+1-j)) a_j b_{n+1-j}.
TruncatedSeries series_pow_rational(const TruncatedSeries& a, const Rational& beta);

/// The series 1 + P_1 w + ... + P_m w^m at the spec's truncation order.
TruncatedSeries denominator_series(const FamilySpec& spec);
/// The series Q_0 + ... + Q_k w^k (1 when Q is empty).
TruncatedSeries numerator_series(const FamilySpec& spec);

/// Reciprocal-family coefficients: [w^n] 1/(1 + sum P_j w^j).
/// Requires empty Q, alpha == 1, beta == 1.
TruncatedSeries expand_Y(const FamilySpec& spec);

/// Rational-family coefficients: [w^n] (sum Q_l w^l)/(1 + sum P_j w^j).
/// Requires alpha == 1, beta == 1.
TruncatedSeries expand_S(const FamilySpec& spec);

/// [w^n] (1 + sum P_j w^j)^(-beta) for rational beta (empty Q, alpha == 1).
TruncatedSeries expand_Y_higher(const FamilySpec& spec);

/// [w^n] (sum Q_l w^l)^alpha * (1 + sum P_j w^j)^(-beta).
TruncatedSeries expand_S_higher(const FamilySpec& spec);

/// numer/denom for arbitrary coefficient lists, requiring only that the
/// denominator's constant term is a nonzero rational constant.  Both lists
/// are read as coefficient sequences from w^0; the result is truncated at
/// `order`.
TruncatedSeries expand_general_rational(const std::vector<Polynomial>& numer,
                                        const std::vector<Polynomial>& denom, int order);

} // namespace ogf

#endif
