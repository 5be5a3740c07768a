#include "ogf/surd.hpp"

namespace ogf {

namespace {

/// If r (>= 0, canonical) is the square of a rational, returns true and
/// stores that square root; numerator and denominator must both be perfect
/// squares since the fraction is reduced.
bool rational_sqrt(const Rational& r, Rational& out) {
    if (r.is_negative()) return false;
    Int num = r.numerator(), den = r.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        out = Rational(sn, sd);
        return true;
    }
    return false;
}

} // namespace

SurdElement::SurdElement(const Rational& rational_part, const Rational& surd_part,
                         const Rational& radicand)
    : a_(rational_part), b_(surd_part), d_(radicand) {
    if (d_.is_negative())
        fail(errc::non_real_surd, "negative radicand " + d_.to_string());
    normalize();
}

void SurdElement::normalize() {
    if (b_.is_zero()) {
        d_ = Rational(0);
        return;
    }
    Rational root;
    if (rational_sqrt(d_, root)) { // includes d == 0
        a_ += b_ * root;
        b_ = Rational(0);
        d_ = Rational(0);
    }
}

SurdElement SurdElement::conjugate() const {
    SurdElement r(*this);
    r.b_ = -r.b_;
    return r;
}

Rational SurdElement::norm() const {
    return a_ * a_ - b_ * b_ * d_;
}

SurdElement SurdElement::operator-() const {
    SurdElement r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {
/// Determines the common radicand of two canonical elements, raising
/// field_mismatch when both are irrational over different radicands.
Rational common_radicand(const SurdElement& x, const SurdElement& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        fail(errc::field_mismatch, "mixing sqrt(" + x.radicand().to_string() + ") with sqrt(" +
                                       y.radicand().to_string() + ")");
    return x.radicand();
}
} // namespace

SurdElement& SurdElement::operator+=(const SurdElement& o) {
    Rational d = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = d;
    normalize();
    return *this;
}

SurdElement& SurdElement::operator-=(const SurdElement& o) {
    return *this += -o;
}

SurdElement& SurdElement::operator*=(const SurdElement& o) {
    Rational d = common_radicand(*this, o);
    // (a1 + b1*sqrt(d))(a2 + b2*sqrt(d)) = a1*a2 + b1*b2*d + (a1*b2 + b1*a2)*sqrt(d)
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

SurdElement& SurdElement::operator/=(const SurdElement& o) {
    if (o.is_zero()) fail(errc::degenerate_input, "division by zero surd");
    // x/y = x * conj(y) / norm(y); norm is nonzero for nonzero y since
    // sqrt(d) is irrational whenever b != 0 in canonical form.
    SurdElement num = *this * o.conjugate();
    Rational n = o.norm();
    num.a_ /= n;
    num.b_ /= n;
    *this = num;
    return *this;
}

SurdElement SurdElement::pow(unsigned exponent) const {
    SurdElement acc{Rational(1)};
    for (unsigned i = 0; i < exponent; ++i) acc *= *this;
    return acc;
}

std::string SurdElement::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string s = a_.to_string();
    if (b_.is_negative())
        s += " - " + (-b_).to_string();
    else
        s += " + " + b_.to_string();
    s += "*sqrt(" + d_.to_string() + ")";
    return s;
}

double SurdElement::to_double(unsigned precision_bits) const {
    if (is_rational()) return a_.to_double();
    // sqrt(p/q) = sqrt(p*q)/q; bracket with an integer square root carried
    // to precision_bits + 32 guard bits, then fold into exact rationals.
    unsigned shift = precision_bits + 32;
    Int p = d_.numerator(), q = d_.denominator();
    Int scaled = p * q;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * shift);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Int den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), shift);
    Rational approx_sqrt(root, den); // |approx - sqrt(d)| < 1/den
    Rational value = a_ + b_ * approx_sqrt;
    return value.to_double();
}

} // namespace ogf
