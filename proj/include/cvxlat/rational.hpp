#ifndef CVXLAT_RATIONAL_HPP
#define CVXLAT_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "cvxlat/errors.hpp"

namespace cvxlat {

/// Exact rational scalar. All coordinate arithmetic in the library is exact;
/// no floating point appears anywhere.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Parses "p", "p/q" or "-p/q" into a canonical rational (lowest terms,
/// positive denominator).
inline Rat parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + s);
        return Rat(num, den);  // constructor canonicalizes
    } catch (const std::runtime_error& e) {
        throw InputError("cannot parse rational '" + s + "': " + e.what());
    }
}

/// Canonical string form: "p" for integers, "p/q" otherwise (q > 0, lowest
/// terms). Round-trips exactly through parse_rational.
inline std::string format_rational(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cvxlat

#endif
