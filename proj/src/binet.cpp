#include "ogf/binet.hpp"

#include "ogf/errors.hpp"

namespace ogf {

QuadraticRootData quadratic_roots(const Rational& p1, const Rational& p2) {
    if (p2.is_zero())
        fail(errc::degenerate_denominator,
             "quadratic_roots: leading coefficient p2 is zero, denominator is not quadratic");
    Rational disc = p1 * p1 - Rational(4) * p2;
    if (disc.is_zero())
        fail(errc::repeated_root,
             "quadratic_roots: zero discriminant, the two roots coincide");
    // SurdElement::sqrt rejects negative radicands with non_real_surd.
    SurdElement sqrt_disc = SurdElement::sqrt(disc);
    Rational two_p2 = Rational(2) * p2;
    SurdElement a1 = (SurdElement(-p1) + sqrt_disc) / SurdElement(two_p2);
    SurdElement a2 = (SurdElement(-p1) - sqrt_disc) / SurdElement(two_p2);
    return QuadraticRootData{p1, p2, disc, sqrt_disc, a1, a2};
}

namespace {

/// 2^(n-1) p2^n as an exact rational (n = 0 gives 1/2).
Rational binet_prefactor(const Rational& p2, unsigned n) {
    Rational two_pow = (n == 0) ? Rational(1, 2) : Rational(Int(1) << (n - 1));
    return two_pow * p2.pow(static_cast<long>(n));
}

} // namespace

SurdElement binet_Y2(const Rational& p1, const Rational& p2, unsigned n) {
    QuadraticRootData roots = quadratic_roots(p1, p2);
    const SurdElement& rt = roots.sqrt_disc;
    SurdElement plus = SurdElement(-p1) + rt;   // -p1 + sqrt(D)
    SurdElement minus = SurdElement(-p1) - rt;  // -p1 - sqrt(D)
    SurdElement term1 = (SurdElement(p1) + rt) / plus.pow(n);
    SurdElement term2 = (SurdElement(p1) - rt) / minus.pow(n);
    return (term1 - term2) / rt * SurdElement(binet_prefactor(p2, n));
}

SurdElement binet_S2(const Rational& p1, const Rational& p2, const Rational& q0,
                     const Rational& q1, unsigned n) {
    QuadraticRootData roots = quadratic_roots(p1, p2);
    const SurdElement& rt = roots.sqrt_disc;
    SurdElement plus = SurdElement(-p1) + rt;
    SurdElement minus = SurdElement(-p1) - rt;
    SurdElement two_q1(Rational(2) * q1);
    SurdElement num1 = (SurdElement(p1) + rt) * SurdElement(q0) - two_q1;
    SurdElement num2 = (SurdElement(-p1) + rt) * SurdElement(q0) + two_q1;
    SurdElement sum = num1 / plus.pow(n) + num2 / minus.pow(n);
    return sum / rt * SurdElement(binet_prefactor(p2, n));
}

Rational closed_form_gm(unsigned m) {
    SurdElement root2 = SurdElement::sqrt(Rational(2));
    SurdElement a = (SurdElement(Rational(1)) + root2).pow(m + 1);
    SurdElement b = (SurdElement(Rational(1)) - root2).pow(m + 1);
    SurdElement sum = (a + b) / SurdElement(Rational(2));
    if (!sum.is_rational())
        fail(errc::non_real_surd, "closed_form_gm: surd parts failed to cancel");
    return sum.rational_part();
}

} // namespace ogf
