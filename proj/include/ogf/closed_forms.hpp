#ifndef OGF_CLOSED_FORMS_HPP
#define OGF_CLOSED_FORMS_HPP

#include <vector>

#include "ogf/polynomial.hpp"

namespace ogf {

/// Exact binomial coefficient C(n, k); zero when k > n, degenerate_input
/// when either argument is negative.
Int binomial(long n, long k);

/// Rising factorial (Pochhammer symbol) (beta)_n = beta (beta+1) ... (beta+n-1).
Rational pochhammer(const Rational& beta, unsigned n);

/// Generalized binomial coefficient C(beta, k) = beta(beta-1)...(beta-k+1)/k!
/// for rational beta (the binomial-series coefficient).
Rational generalized_binomial(const Rational& beta, unsigned k);

/// Odometer over the index vectors (n_2, ..., n_m) with nonnegative entries
/// and weight sum(j * n_j, j = 2..m) <= n; the level-1 index is recovered as
/// n_1 = n - weight >= 0.  Each admissible vector is visited exactly once;
/// the effective bound at level j is the floor-divided remaining weight
/// budget floor((n - sum_{i>j} i*n_i)/j).
///
/// This iterates exactly the support of the m-term reciprocal family's
/// nested-sum closed form: all (n_1..n_m) >= 0 with n_1 + 2n_2 + ... + m n_m = n.
class NestedSumIndex {
  public:
    /// m >= 1 levels, outer index n (degenerate_input when m == 0).
    NestedSumIndex(unsigned m, unsigned n);

    bool done() const { return done_; }
    void advance();

    /// n_j for 2 <= j <= m.
    unsigned level(unsigned j) const;
    /// Recovered n_1 = n - sum(j * n_j).
    unsigned n1() const { return n_ - weight_; }
    unsigned levels() const { return m_; }

  private:
    unsigned m_, n_, weight_ = 0;
    bool done_ = false;
    std::vector<unsigned> idx_; // idx_[j-2] = n_j
};

/// Two-term reciprocal family, explicit single sum:
///   y_n(P1,P2) = sum_{n2=0..floor(n/2)} (-1)^(n-n2) C(n-n2, n2) P1^(n-2n2) P2^n2.
Polynomial explicit_Y_m2(const Polynomial& P1, const Polynomial& P2, unsigned n);

/// Three-term reciprocal family, explicit double sum over transformed
/// indices (support-exact bounds; see NestedSumIndex notes):
///   y_n = sum_{n2} sum_{n3=0..floor(n2/2)} (-1)^(n-n2)
///         C(n-n2-n3, n2-2n3) C(n-n2, n3) P1^(n-2n2+n3) P2^(n2-2n3) P3^n3,
/// skipping index pairs that would need a negative P1 exponent.
Polynomial explicit_Y_m3(const Polynomial& P1, const Polynomial& P2, const Polynomial& P3,
                         unsigned n);

/// General m-term explicit nested sum over the exact support
/// { (n_1..n_m) >= 0 : sum j n_j = n }:
///   y_n(P) = sum (-1)^(n_1+...+n_m) prod_{d=2..m} C(n_1+...+n_d, n_d) prod P_v^{n_v}.
Polynomial explicit_Y_general(const std::vector<Polynomial>& P, unsigned n);

/// [w^n] (1 + sum_j P_j w^j)^beta by the terminating binomial-series double
/// sum: sum over the same support of C(beta, s) * s!/(n_1!...n_m!) * prod P_v^{n_v}
/// with s = n_1+...+n_m.  Independent of the series engine; used as a
/// cross-check for rational-exponent families.
Polynomial binomial_series_coefficient(const std::vector<Polynomial>& P, const Rational& beta,
                                       unsigned n);

/// Numerator convolution: s_n = sum_{l=0..min(k,n)} Q_l y_{n-l}.
/// Y must supply indices 0..n (truncation_exceeded otherwise).
Polynomial convolution_S_from_Y(const std::vector<Polynomial>& Y, const std::vector<Polynomial>& Q,
                                unsigned n);

/// Same convolution against a higher-order y sequence (rational denominator
/// exponent); the numerator exponent must be 1 for the convolution theorem
/// to apply directly.
Polynomial convolution_S_higher(const std::vector<Polynomial>& Y_beta,
                                const std::vector<Polynomial>& Q, unsigned n);

/// Derivative recurrence for the reciprocal family:
///   y_{n+1} = -(1/(n+1)) sum_{j=1..min(m,n+1)} j P_j ysq_{n-j+1},
/// where ysq is the order-2 sequence (square of the reciprocal).
/// ysq must supply indices 0..n.
Polynomial recurrence_Y_next(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Ysq,
                             unsigned n);

/// Derivative recurrence for the rational family (sign-corrected product
/// rule G' = Q'F + QF'):
///   s_{n+1} = (1/(n+1)) [ sum_{l=1..k} l Q_l y_{n+1-l}
///                        + sum_{l=0..k} (n+1-l) Q_l y_{n+1-l} ].
/// Y must supply indices 0..n+1.  Telescopes to the numerator convolution.
Polynomial recurrence_S_next(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Q,
                             const std::vector<Polynomial>& Y, unsigned n);

/// Two-variable family 1/(1 - x^k t - y^m t^(m+n)), explicit coefficient:
///   G_j = sum_{c=0..floor(j/(m+n))} C(j - c(m+n-1), c) y^(mc) x^(k(j - c(m+n)))
/// returned as a polynomial in x1 (= x) and x2 (= y).
/// degenerate_input when m + n == 0.
Polynomial explicit_twovar_G(unsigned k, unsigned m, unsigned n, unsigned j);

} // namespace ogf

#endif
