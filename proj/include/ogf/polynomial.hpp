#ifndef OGF_POLYNOMIAL_HPP
#define OGF_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "ogf/rational.hpp"

namespace ogf {

/// Exponent vector of a monomial; index i holds the exponent of variable
/// x_{i+1}.  Canonical form never has trailing zero exponents, so the
/// constant monomial is the empty vector.
struct Monomial {
    std::vector<unsigned> exponents;

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exponents) d += e;
        return d;
    }

    void trim() {
        while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
};

/// Graded-lexicographic order (total degree first, then x1 outranks x2 ...).
/// Used as the single term order everywhere: storage, printing, equality.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational in variables x1..x9.
///
/// Terms are kept in a graded-lex ordered map with no zero coefficients,
/// so equal polynomials are structurally identical and printing is
/// deterministic.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long constant) : Polynomial(Rational(constant)) {}

    /// The variable x_index (1-based, 1..9).
    static Polynomial variable(unsigned index);
    static Polynomial constant(const Rational& value) { return Polynomial(value); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (degenerate_input when not constant).
    Rational constant_value() const;

    unsigned degree() const; ///< total degree; 0 for the zero polynomial
    /// Largest variable index actually present (0 when none).
    unsigned max_variable() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Nonnegative integer power by repeated squaring.  Exponents above
    /// the documented guard (4096) raise invalid_parameter as a safety rail.
    Polynomial pow(unsigned exponent) const;

    /// Full evaluation at a rational point: `point[i]` supplies x_i.  Every
    /// variable occurring in the polynomial must be bound
    /// (unbound_variable otherwise).
    Rational eval(const std::map<unsigned, Rational>& point) const;

    /// Partial evaluation: substitutes the given variables, leaves the rest
    /// symbolic.
    Polynomial eval_partial(const std::map<unsigned, Rational>& point) const;

    /// Substitution x_index -> factor * x_index.
    Polynomial scale_variable(unsigned index, const Rational& factor) const;

    /// Coefficient of a monomial (zero when absent).
    Rational coefficient(const Monomial& m) const;

    /// Deterministic text form: graded-lex descending terms, explicit '*'
    /// between coefficient and variables, '^' for exponents, e.g.
    /// "x1^2 + 4*x1 + 1" or "-1/2*x1*x2^2".  The zero polynomial prints "0".
    /// parse_polynomial() round-trips this form.
    std::string to_string() const;

    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

    /// Adds `coeff * m` (normalizing away zero results).
    void add_term(Monomial m, const Rational& coeff);

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

  private:
    std::map<Monomial, Rational, GrlexLess> terms_;
};

} // namespace ogf

#endif
