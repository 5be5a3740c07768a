#ifndef OGF_TRANSFORMS_HPP
#define OGF_TRANSFORMS_HPP

#include <vector>

#include "ogf/polynomial.hpp"

namespace ogf {

/// Binomial (Euler-type) sequence transform with parameter theta:
///   v_j = sum_{v=0..j} C(j, v) theta^(j-v) u_v.
/// theta may be any polynomial (rational constants included); the inverse
/// transform is the same sum with -theta, and the two compose to the
/// identity exactly.
std::vector<Polynomial> euler_transform(const std::vector<Polynomial>& u, const Polynomial& theta);

/// Inverse transform: euler_transform with parameter -theta.
std::vector<Polynomial> euler_inverse(const std::vector<Polynomial>& u, const Polynomial& theta);

/// Exact Fibonacci number F_n (F_0 = 0, F_1 = 1).
Int fibonacci_number(unsigned n);
/// Exact Lucas number L_n (L_0 = 2, L_1 = 1).
Int lucas_number(unsigned n);

/// Result of an adaptive partial summation.
struct NumericSum {
    double value = 0.0;       ///< accumulated partial sum
    unsigned terms_used = 0;  ///< number of series terms added
    double last_term = 0.0;   ///< the final term added (magnitude indicator)
};

/// Lambert-type series L(x) = sum_{j>=1} x^j / (1 - x^j), summed until the
/// geometric tail bound |x|^(j+1) / (1-|x|)^2 drops below tol.
/// Errors: divergent_argument when |x| >= 1, invalid_parameter when tol <= 0.
NumericSum lambert_partial(double x, double tol);

/// sum_{j>=1} x^j / F_(m*j) (Fibonacci numbers in the denominator), summed
/// with an exact big-integer denominator per term until the estimated
/// geometric tail drops below tol.
/// Errors: degenerate_input when m == 0, divergent_argument when |x| is at
/// or beyond the convergence radius phi^m, invalid_parameter when tol <= 0.
NumericSum reciprocal_fib_partial(unsigned m, double x, double tol);

/// sum_{j>=1} L_(2j) x^j / F_(4j) (Lucas-weighted Fibonacci reciprocals),
/// same summation contract; convergence radius phi^2.
NumericSum lucas_weighted_fib_partial(double x, double tol);

/// Per-index report comparing the rational-family values s_j(-1,-1; 1, 2)
/// (the series (1 + 2w)/(1 - w - w^2)) against two candidate Fibonacci
/// ratios: the quotient F_(2j)/F_j and its index-shifted variant
/// F_(2j+2)/F_(j+1).
struct RatioCheck {
    unsigned j = 0;
    Rational s_value;        ///< s_j from the series expansion
    bool printed_defined = false; ///< F_(2j)/F_j is 0/0 at j = 0
    Rational printed_ratio;  ///< F_(2j)/F_j when defined
    bool printed_matches = false;
    Rational offset_ratio;   ///< F_(2j+2)/F_(j+1)
    bool offset_matches = false;
};

std::vector<RatioCheck> verify_f2j_over_fj(unsigned j_max);

} // namespace ogf

#endif
