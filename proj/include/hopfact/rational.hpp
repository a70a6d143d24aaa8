#ifndef HOPFACT_RATIONAL_HPP
#define HOPFACT_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hopfact {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator); every operation below preserves that.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Decimal-string rationals, as used in JSON output.
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rational(num);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace hopfact

#endif
