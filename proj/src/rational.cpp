#include "lgl/rational.hpp"

#include <ostream>

namespace lgl {

Rational Rational::from_string(const std::string& text) {
    std::string s = text;
    // trim ascii whitespace
    const auto notspace = [](char c) { return c != ' ' && c != '\t'; };
    while (!s.empty() && !notspace(s.front())) s.erase(s.begin());
    while (!s.empty() && !notspace(s.back())) s.pop_back();
    if (s.empty()) throw SyntaxError("empty rational literal", 0);

    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZeroPolynomial("rational literal with zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw SyntaxError("malformed rational literal '" + text + "'", 0);
    }
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer floor_to_integer(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

Rational fractional_part(const Rational& r) { return r - Rational(floor_to_integer(r)); }

}  // namespace lgl
