#ifndef CONFSPACE_RATIONAL_HPP
#define CONFSPACE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace confspace {

// Exact arbitrary-precision rational scalar.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p/q" etc. Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const Rational& q) {
    return q.get_str();
}

} // namespace confspace

#endif
