#pragma once

/// A place of the projective line over Q: a finite rational point c with
/// local parameter t = z - c, or the point at infinity with t = 1/z.

#include <optional>
#include <string>

#include "lgl/rational.hpp"

namespace lgl {

class Place {
public:
    static Place finite(const Rational& c) { return Place(c); }
    static Place infinity() { return Place(); }

    bool is_infinity() const { return !c_.has_value(); }
    const Rational& point() const { return *c_; }

    bool operator==(const Place& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return *c_ == *o.c_;
    }
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const {
        // finite places in value order, infinity last
        if (is_infinity()) return false;
        if (o.is_infinity()) return true;
        return *c_ < *o.c_;
    }

    std::string str() const { return is_infinity() ? "inf" : c_->str(); }

    // Accepts "inf" (or "oo") and rational point strings "p/q" / "p".
    static Place from_string(const std::string& text) {
        if (text == "inf" || text == "oo" || text == "infinity") return infinity();
        return finite(Rational::from_string(text));
    }

private:
    Place() = default;
    explicit Place(const Rational& c) : c_(c) {}

    std::optional<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Place& p) { return os << p.str(); }

}  // namespace lgl
