#include "lgl/operator_parser.hpp"

#include <cctype>
#include <sstream>

namespace lgl {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    DiffOp parse() {
        skip_space();
        DiffOp result = expr();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return result;
    }

private:
    DiffOp expr() {
        // Unary minus on the first term is accepted as a convenience.
        bool negate = false;
        skip_space();
        if (peek() == '-') { negate = true; ++pos_; }
        DiffOp acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            const char c = peek();
            if (c == '+') { ++pos_; acc = acc + term(); }
            else if (c == '-') { ++pos_; acc = acc - term(); }
            else break;
        }
        return acc;
    }

    DiffOp term() {
        DiffOp acc = factor();
        while (true) {
            skip_space();
            if (peek() == '*') { ++pos_; acc = acc * factor(); }
            else break;
        }
        return acc;
    }

    DiffOp factor() {
        DiffOp b = base();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            const unsigned long e = parse_uint();
            DiffOp acc = DiffOp::multiplication(RatFunc(1));
            for (unsigned long i = 0; i < e; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    DiffOp base() {
        skip_space();
        const char c = peek();
        if (c == 'D') { ++pos_; return DiffOp::derivation(); }
        if (c == 'z') { ++pos_; return DiffOp::multiplication(RatFunc(Poly::monomial(Rational(1), 1))); }
        if (c == '(') {
            ++pos_;
            DiffOp inner = expr();
            skip_space();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational_literal();
        throw SyntaxError("expected 'D', 'z', a rational, or '('", pos_);
    }

    DiffOp rational_literal() {
        const Integer num = parse_int();
        skip_space();
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            const unsigned long den = parse_uint();
            if (den == 0) throw SyntaxError("zero denominator", den_pos);
            return DiffOp::multiplication(RatFunc(Rational(num, Integer(den))));
        }
        return DiffOp::multiplication(RatFunc(Rational(num)));
    }

    Integer parse_int() {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected an integer", pos_);
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    unsigned long parse_uint() {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected a nonnegative integer", pos_);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(peek() - '0');
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : text_(text) {}

    RatFunc parse() {
        skip_space();
        RatFunc result = expr();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return result;
    }

private:
    RatFunc expr() {
        bool negate = false;
        skip_space();
        if (peek() == '-') { negate = true; ++pos_; }
        RatFunc acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            const char c = peek();
            if (c == '+') { ++pos_; acc += term(); }
            else if (c == '-') { ++pos_; acc -= term(); }
            else break;
        }
        return acc;
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            skip_space();
            if (peek() == '*') { ++pos_; acc = acc * factor(); }
            else if (peek() == '/') {
                const std::size_t at = pos_;
                ++pos_;
                const RatFunc d = factor();
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                acc = acc / d;
            } else break;
        }
        return acc;
    }

    RatFunc factor() {
        RatFunc b = base();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            unsigned long e = 0;
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected a nonnegative integer", pos_);
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                ++pos_;
            }
            RatFunc acc(1);
            for (unsigned long i = 0; i < e; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    RatFunc base() {
        skip_space();
        const char c = peek();
        if (c == 'z') { ++pos_; return RatFunc(Poly::monomial(Rational(1), 1)); }
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            skip_space();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return RatFunc(Rational(Integer(text_.substr(start, pos_ - start))));
        }
        throw SyntaxError("expected 'z', a number, or '('", pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// One printed factor for the coefficient of D^i, parseable back.
std::string coefficient_factor(const Poly& p, bool& negated) {
    negated = false;
    if (p.degree() <= 0) {
        Rational c = p.coefficient(0);
        if (c.sign() < 0) { negated = true; c = -c; }
        if (c.is_integer()) return c.str();
        return "(" + c.str() + ")";
    }
    // Single monomial c*z^k prints without parentheses.
    bool single = true;
    for (long k = 0; k < p.degree(); ++k)
        if (!p.coefficient(static_cast<std::size_t>(k)).is_zero()) { single = false; break; }
    if (single) {
        Rational c = p.leading_coefficient();
        if (c.sign() < 0) { negated = true; c = -c; }
        std::ostringstream os;
        if (c != Rational(1)) {
            if (c.is_integer()) os << c.str() << "*";
            else os << "(" << c.str() << ")*";
        }
        os << "z";
        if (p.degree() > 1) os << "^" << p.degree();
        return os.str();
    }
    return "(" + p.str("z") + ")";
}

}  // namespace

DiffOp parse_operator(const std::string& text) { return Parser(text).parse(); }

RatFunc parse_rational_function(const std::string& text) { return ScalarParser(text).parse(); }

std::string print_operator(const DiffOp& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = op.order(); i >= 0; --i) {
        const RatFunc c = op.coefficient(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!c.is_polynomial())
            throw InvalidCombination("printing needs polynomial coefficients; clear denominators first");
        const Poly p = c.as_polynomial();
        bool negated = false;
        std::string factor = coefficient_factor(p, negated);
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        const bool is_one = (factor == "1");
        if (i == 0) {
            os << factor;
        } else {
            if (!is_one) os << factor << "*";
            os << "D";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace lgl
