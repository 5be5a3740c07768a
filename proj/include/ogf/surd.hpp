#ifndef OGF_SURD_HPP
#define OGF_SURD_HPP

#include <string>

#include "ogf/rational.hpp"

namespace ogf {

/// Element a + b*sqrt(d) of the real quadratic extension Q(sqrt(d)),
/// with a, b, d exact rationals and d >= 0.
///
/// Canonical form (established at construction and preserved by arithmetic):
///   * d < 0 is rejected (non_real_surd);
///   * if d is the square of a rational, b*sqrt(d) is folded into the
///     rational part and the element becomes purely rational;
///   * purely rational elements (b == 0) carry radicand 0, so equality is
///     plain memberwise comparison.
///
/// Arithmetic between two genuinely irrational elements requires the same
/// radicand (field_mismatch otherwise); a purely rational element combines
/// with any radicand.
class SurdElement {
  public:
    SurdElement() : a_(0), b_(0), d_(0) {}
    SurdElement(const Rational& value) : a_(value), b_(0), d_(0) {}
    SurdElement(const Rational& rational_part, const Rational& surd_part, const Rational& radicand);

    /// sqrt(d) as an element (normalizes if d is a perfect square).
    static SurdElement sqrt(const Rational& radicand) { return SurdElement(Rational(0), Rational(1), radicand); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    /// Galois conjugate a - b*sqrt(d).
    SurdElement conjugate() const;
    /// Field norm (a + b*sqrt(d))(a - b*sqrt(d)) = a^2 - b^2*d, always rational.
    Rational norm() const;

    SurdElement operator-() const;
    SurdElement& operator+=(const SurdElement& o);
    SurdElement& operator-=(const SurdElement& o);
    SurdElement& operator*=(const SurdElement& o);
    SurdElement& operator/=(const SurdElement& o); ///< divide by zero -> degenerate_input

    friend SurdElement operator+(SurdElement x, const SurdElement& y) { return x += y; }
    friend SurdElement operator-(SurdElement x, const SurdElement& y) { return x -= y; }
    friend SurdElement operator*(SurdElement x, const SurdElement& y) { return x *= y; }
    friend SurdElement operator/(SurdElement x, const SurdElement& y) { return x /= y; }

    friend bool operator==(const SurdElement& x, const SurdElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const SurdElement& x, const SurdElement& y) { return !(x == y); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Nonnegative integer power (repeated multiplication; exponents here
    /// are small sequence indices).
    SurdElement pow(unsigned exponent) const;

    /// Text form "a + b*sqrt(d)" (rational elements print as plain rationals).
    std::string to_string() const;

    /// Floating approximation: the element is bracketed by an exact rational
    /// with absolute error below 2^-(precision_bits) before the final
    /// round-to-nearest-double conversion.
    double to_double(unsigned precision_bits = 64) const;

  private:
    void normalize();

    Rational a_, b_, d_;
};

} // namespace ogf

#endif
