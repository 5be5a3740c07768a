#ifndef OGF_BINET_HPP
#define OGF_BINET_HPP

#include "ogf/surd.hpp"

namespace ogf {

/// Root data for the constant two-term denominator 1 + p1 w + p2 w^2,
/// written as p2 (w - a1)(w - a2).
struct QuadraticRootData {
    Rational p1, p2;
    Rational discriminant;  ///< p1^2 - 4 p2 (positive, non-square unless collapsed)
    SurdElement sqrt_disc;  ///< principal square root of the discriminant
    SurdElement a1, a2;     ///< roots (-p1 +- sqrt)/ (2 p2); a1 a2 = 1/p2, a1 + a2 = -p1/p2
};

/// Computes the roots of 1 + p1 w + p2 w^2.
/// Errors: degenerate_denominator when p2 == 0 (not a genuine quadratic),
/// repeated_root when the discriminant vanishes, non_real_surd when it is
/// negative.
QuadraticRootData quadratic_roots(const Rational& p1, const Rational& p2);

/// Closed form for the two-term reciprocal family y_n(p1, p2) via the
/// partial-fraction surd expression
///   y_n = (2^(n-1) p2^n / sqrt(D)) * [ (p1 + sqrt(D)) / (-p1 + sqrt(D))^n
///                                     - (p1 - sqrt(D)) / (-p1 - sqrt(D))^n ].
/// The result is always rational (the surd parts cancel); it is returned as
/// a SurdElement so callers can assert that cancellation exactly.
SurdElement binet_Y2(const Rational& p1, const Rational& p2, unsigned n);

/// Closed form for the two-term rational family s_n(p1, p2; q0, q1):
///   s_n = (2^(n-1) p2^n / sqrt(D)) * [ ((p1 + sqrt(D)) q0 - 2 q1) / (-p1 + sqrt(D))^n
///                                     + ((-p1 + sqrt(D)) q0 + 2 q1) / (-p1 - sqrt(D))^n ].
SurdElement binet_S2(const Rational& p1, const Rational& p2, const Rational& q0,
                     const Rational& q1, unsigned n);

/// The garland rank sequence 1, 3, 7, 17, 41, ... in closed form:
///   g_m = ((1 + sqrt 2)^(m+1) + (1 - sqrt 2)^(m+1)) / 2.
/// The surd parts cancel; the rational value is returned.
Rational closed_form_gm(unsigned m);

} // namespace ogf

#endif
