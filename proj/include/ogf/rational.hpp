#ifndef OGF_RATIONAL_HPP
#define OGF_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "ogf/errors.hpp"

namespace ogf {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Exact rational scalar.
///
/// Invariants (maintained by every constructor and operation):
///   * always stored in lowest terms,
///   * denominator strictly positive,
///   * zero is canonically 0/1.
///
/// Backed by GMP; the wrapper adds checked division (raising
/// errc::degenerate_input instead of aborting) and the canonical
/// "p/q" text form used across the CLI and document formats.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);   ///< reduces; den == 0 -> degenerate_input
    Rational(long num, long den);

    /// Parses "p", "-p", "p/q" (arbitrary precision). Raises parse_error
    /// on malformed text and degenerate_input on a zero denominator.
    static Rational from_string(const std::string& text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    /// Value as long; requires an integral value that fits (degenerate_input otherwise).
    long to_long() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer power; negative exponents require a nonzero base
    /// (degenerate_input otherwise).
    Rational pow(long exponent) const;

    Rational abs() const;

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string to_string() const;

    /// Nearest double (GMP rounding); fine for display and numeric seeding.
    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

} // namespace ogf

#endif
