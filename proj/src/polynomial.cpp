#include "ogf/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace ogf {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t n = std::max(a.exponents.size(), b.exponents.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.exponents.size() ? a.exponents[i] : 0;
        unsigned eb = i < b.exponents.size() ? b.exponents[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(unsigned index) {
    if (index < 1 || index > 9)
        fail(errc::degenerate_input, "variable index " + std::to_string(index) + " outside x1..x9");
    Polynomial p;
    Monomial m;
    m.exponents.assign(index, 0);
    m.exponents[index - 1] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.exponents.empty();
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        fail(errc::degenerate_input, "polynomial " + to_string() + " is not constant");
    return terms_.begin()->second;
}

unsigned Polynomial::degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.total_degree();
}

unsigned Polynomial::max_variable() const {
    unsigned mv = 0;
    for (const auto& [m, c] : terms_)
        mv = std::max(mv, static_cast<unsigned>(m.exponents.size()));
    return mv;
}

void Polynomial::add_term(Monomial m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    m.trim();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.exponents.assign(std::max(ma.exponents.size(), mb.exponents.size()), 0);
            for (std::size_t i = 0; i < ma.exponents.size(); ++i) m.exponents[i] += ma.exponents[i];
            for (std::size_t i = 0; i < mb.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
            r.add_term(std::move(m), ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    constexpr unsigned kMaxExponent = 4096;
    if (exponent > kMaxExponent)
        fail(errc::invalid_parameter,
             "polynomial exponent " + std::to_string(exponent) + " beyond guard " +
                 std::to_string(kMaxExponent));
    Polynomial result{Rational(1)};
    Polynomial base = *this;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

Rational Polynomial::eval(const std::map<unsigned, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            auto it = point.find(static_cast<unsigned>(i + 1));
            if (it == point.end())
                fail(errc::unbound_variable, "x" + std::to_string(i + 1) + " not bound");
            term *= it->second.pow(static_cast<long>(m.exponents[i]));
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::eval_partial(const std::map<unsigned, Rational>& point) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rem;
        rem.exponents.assign(m.exponents.size(), 0);
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            auto it = point.find(static_cast<unsigned>(i + 1));
            if (it == point.end())
                rem.exponents[i] = m.exponents[i];
            else
                coeff *= it->second.pow(static_cast<long>(m.exponents[i]));
        }
        r.add_term(std::move(rem), coeff);
    }
    return r;
}

Polynomial Polynomial::scale_variable(unsigned index, const Rational& factor) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        if (index >= 1 && index <= m.exponents.size() && m.exponents[index - 1] > 0)
            coeff *= factor.pow(static_cast<long>(m.exponents[index - 1]));
        r.add_term(m, coeff);
    }
    return r;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    Monomial key = m;
    key.trim();
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse iteration over the grlex-ascending map = descending print order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool negative = c.is_negative();
        Rational mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool has_vars = !m.exponents.empty();
        bool unit = mag == Rational(1);
        if (!has_vars || !unit) os << mag.to_string();
        bool need_star = !unit && has_vars;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (need_star) os << '*';
            os << 'x' << (i + 1);
            if (m.exponents[i] > 1) os << '^' << m.exponents[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

} // namespace ogf
