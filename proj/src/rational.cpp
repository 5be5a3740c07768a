#include "ogf/rational.hpp"

#include <cctype>
#include <ostream>

namespace ogf {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::degenerate_input: return "degenerate input";
        case errc::field_mismatch: return "field mismatch";
        case errc::non_real_surd: return "non-real surd";
        case errc::unbound_variable: return "unbound variable";
        case errc::length_mismatch: return "length mismatch";
        case errc::non_invertible_series: return "non-invertible series";
        case errc::truncation_exceeded: return "truncation exceeded";
        case errc::unknown_entry: return "unknown entry";
        case errc::invalid_parameter: return "invalid parameter";
        case errc::divergent_argument: return "divergent argument";
        case errc::repeated_root: return "repeated root";
        case errc::degenerate_denominator: return "degenerate denominator";
        case errc::parse_error: return "parse error";
        case errc::io_error: return "io error";
    }
    return "error";
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) fail(errc::degenerate_input, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::from_string(const std::string& text) {
    // Accepted forms: optional sign, digits, optionally "/" digits.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) fail(errc::parse_error, "malformed rational literal '" + text + "'");
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        fail(errc::parse_error, "malformed rational literal '" + text + "'");
    return Rational(Int(num), Int(den));
}

long Rational::to_long() const {
    if (!is_integer()) fail(errc::degenerate_input, "rational " + to_string() + " is not an integer");
    if (!v_.get_num().fits_slong_p())
        fail(errc::degenerate_input, "integer " + to_string() + " does not fit a machine word");
    return v_.get_num().get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(errc::degenerate_input, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    if (is_zero() && exponent < 0) fail(errc::degenerate_input, "negative power of zero");
    Rational base = exponent > 0 ? *this : Rational(1) / *this;
    unsigned long e = exponent > 0 ? static_cast<unsigned long>(exponent)
                                   : static_cast<unsigned long>(-(exponent + 1)) + 1;
    Rational acc(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), e);
    acc.v_ = mpq_class(num, den); // powers of a canonical fraction stay canonical
    return acc;
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace ogf
